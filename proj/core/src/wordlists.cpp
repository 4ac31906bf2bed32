#include "corpuscope/wordlists.hpp"

// Bundled default word lists. Overridable at run time via the config's
// stopword_file / abbreviation_file / easy_word_file / country_file entries.

namespace corpuscope {

namespace {

// Standard English stop word list (318 entries).
const char* const kStopwords[] = {
    "a", "about", "above", "across", "after", "afterwards", "again", "against", "all", "almost",
    "alone", "along", "already", "also", "although", "always", "am", "among", "amongst",
    "amoungst", "amount", "an", "and", "another", "any", "anyhow", "anyone", "anything",
    "anyway", "anywhere", "are", "around", "as", "at", "back", "be", "became", "because",
    "become", "becomes", "becoming", "been", "before", "beforehand", "behind", "being", "below",
    "beside", "besides", "between", "beyond", "bill", "both", "bottom", "but", "by", "call",
    "can", "cannot", "cant", "co", "con", "could", "couldnt", "cry", "de", "describe", "detail",
    "do", "done", "down", "due", "during", "each", "eg", "eight", "either", "eleven", "else",
    "elsewhere", "empty", "enough", "etc", "even", "ever", "every", "everyone", "everything",
    "everywhere", "except", "few", "fifteen", "fifty", "fill", "find", "fire", "first", "five",
    "for", "former", "formerly", "forty", "found", "four", "from", "front", "full", "further",
    "get", "give", "go", "had", "has", "hasnt", "have", "he", "hence", "her", "here",
    "hereafter", "hereby", "herein", "hereupon", "hers", "herself", "him", "himself", "his",
    "how", "however", "hundred", "i", "ie", "if", "in", "inc", "indeed", "interest", "into",
    "is", "it", "its", "itself", "keep", "last", "latter", "latterly", "least", "less", "ltd",
    "made", "many", "may", "me", "meanwhile", "might", "mill", "mine", "more", "moreover",
    "most", "mostly", "move", "much", "must", "my", "myself", "name", "namely", "neither",
    "never", "nevertheless", "next", "nine", "no", "nobody", "none", "noone", "nor", "not",
    "nothing", "now", "nowhere", "of", "off", "often", "on", "once", "one", "only", "onto", "or",
    "other", "others", "otherwise", "our", "ours", "ourselves", "out", "over", "own", "part",
    "per", "perhaps", "please", "put", "rather", "re", "same", "see", "seem", "seemed",
    "seeming", "seems", "serious", "several", "she", "should", "show", "side", "since",
    "sincere", "six", "sixty", "so", "some", "somehow", "someone", "something", "sometime",
    "sometimes", "somewhere", "still", "such", "system", "take", "ten", "than", "that", "the",
    "their", "them", "themselves", "then", "thence", "there", "thereafter", "thereby",
    "therefore", "therein", "thereupon", "these", "they", "thick", "thin", "third", "this",
    "those", "though", "three", "through", "throughout", "thru", "thus", "to", "together", "too",
    "top", "toward", "towards", "twelve", "twenty", "two", "un", "under", "until", "up", "upon",
    "us", "very", "via", "was", "we", "well", "were", "what", "whatever", "when", "whence",
    "whenever", "where", "whereafter", "whereas", "whereby", "wherein", "whereupon", "wherever",
    "whether", "which", "while", "whither", "who", "whoever", "whole", "whom", "whose", "why",
    "will", "with", "within", "without", "would", "yet", "you", "your", "yours", "yourself",
    "yourselves",
};

// Dotted abbreviations that do not terminate a sentence.
const char* const kAbbreviations[] = {
    "al.", "approx.", "ca.", "cf.", "dr.", "e.g.", "eq.", "eqs.", "et.", "etc.", "fig.", "figs.",
    "i.e.", "jr.", "mr.", "mrs.", "ms.", "no.", "nos.", "p.", "pp.", "prof.", "ref.", "refs.",
    "resp.", "sec.", "st.", "tab.", "vol.", "vs.",
};

// Common-word list (4582 entries): a basic-English core plus regular
// inflections. Words outside this list with two or more syllables count as
// difficult in the readability report.
const char* const kEasyWords[] = {
    "able", "abled", "ables", "abling", "about", "account", "accounted", "accounting",
    "accounts", "acid", "acided", "aciding", "acids", "across", "act", "acted", "acting", "acts",
    "addition", "additioned", "additioning", "additions", "adjustment", "adjustmented",
    "adjustmenting", "adjustments", "advertisement", "advertisemented", "advertisementing",
    "advertisements", "after", "again", "agained", "againing", "agains", "against", "agreement",
    "agreemented", "agreementing", "agreements", "air", "aired", "airing", "airs", "all",
    "almost", "almosted", "almosting", "almosts", "also", "alsoed", "alsoing", "alsos", "always",
    "alwaysed", "alwayses", "alwaysing", "am", "among", "amount", "amounted", "amounting",
    "amounts", "amusement", "amusemented", "amusementing", "amusements", "an", "analysis",
    "analysised", "analysises", "analysising", "and", "angle", "angled", "angles", "angling",
    "angried", "angries", "angry", "angrying", "animal", "animaled", "animaling", "animals",
    "answer", "answered", "answering", "answers", "ant", "anted", "anting", "ants", "any",
    "apparatus", "apparatused", "apparatuses", "apparatusing", "apple", "appled", "apples",
    "appling", "approval", "approvaled", "approvaling", "approvals", "april", "apriled",
    "apriling", "aprils", "arch", "arched", "arches", "arching", "are", "ared", "ares",
    "argument", "argumented", "argumenting", "arguments", "aring", "arm", "armed", "armied",
    "armies", "arming", "arms", "army", "armying", "art", "arted", "arting", "arts", "as", "ask",
    "asked", "askeded", "askeding", "askeds", "asking", "asks", "asksed", "askses", "asksing",
    "at", "ate", "ated", "ates", "ating", "attack", "attacked", "attacking", "attacks",
    "attempt", "attempted", "attempting", "attempts", "attention", "attentioned", "attentioning",
    "attentions", "attraction", "attractioned", "attractioning", "attractions", "august",
    "augusted", "augusting", "augusts", "aunt", "aunted", "aunting", "aunts", "authoritied",
    "authorities", "authority", "authoritying", "automatic", "automaticed", "automaticing",
    "automatics", "awake", "awaked", "awakes", "awaking", "away", "awayed", "awaying", "aways",
    "babied", "babies", "baby", "babying", "back", "backed", "backing", "backs", "bad", "baded",
    "bading", "bads", "bag", "baged", "baging", "bags", "balance", "balanced", "balances",
    "balancing", "ball", "balled", "balling", "balls", "band", "banded", "banding", "bands",
    "base", "based", "baseded", "baseding", "baseds", "bases", "basin", "basined", "basing",
    "basining", "basins", "basket", "basketed", "basketing", "baskets", "bath", "bathed",
    "bathing", "baths", "be", "bean", "beaned", "beaning", "beans", "beautiful", "beautifuled",
    "beautifuling", "beautifuls", "became", "becamed", "becames", "becaming", "because",
    "becaused", "becauses", "becausing", "become", "becomed", "becomes", "becomesed",
    "becomeses", "becomesing", "becoming", "bed", "beded", "beding", "beds", "bee", "beed",
    "been", "beened", "beening", "beens", "bees", "before", "began", "beganed", "beganing",
    "begans", "begin", "begined", "begining", "begins", "beginsed", "beginses", "beginsing",
    "behaviour", "behavioured", "behaviouring", "behaviours", "being", "beinged", "beinging",
    "beings", "belief", "beliefed", "beliefing", "beliefs", "believe", "believed", "believes",
    "believing", "bell", "belled", "belling", "bells", "bent", "bented", "benting", "bents",
    "berried", "berries", "berry", "berrying", "best", "bested", "besting", "bests", "better",
    "bettered", "bettering", "betters", "between", "big", "biged", "bigger", "biggered",
    "biggering", "biggers", "biggest", "biggested", "biggesting", "biggests", "biging", "bigs",
    "bird", "birded", "birding", "birds", "birth", "birthed", "birthing", "births", "bit",
    "bite", "bited", "bites", "biting", "bits", "bitter", "bittered", "bittering", "bitters",
    "black", "blacked", "blacking", "blacks", "blade", "bladed", "blades", "blading", "blood",
    "blooded", "blooding", "bloods", "blow", "blowed", "blowing", "blows", "blue", "blued",
    "blues", "bluing", "board", "boarded", "boarding", "boards", "boat", "boated", "boating",
    "boats", "bodied", "bodies", "body", "bodying", "boiling", "boilinged", "boilinging",
    "boilings", "bone", "boned", "bones", "boning", "book", "booked", "booking", "books", "boot",
    "booted", "booting", "boots", "bottle", "bottled", "bottles", "bottling", "box", "boxed",
    "boxes", "boxing", "boy", "boyed", "boying", "boys", "brain", "brained", "braining",
    "brains", "brake", "braked", "brakes", "braking", "branch", "branched", "branches",
    "branching", "brass", "brassed", "brasses", "brassing", "bread", "breaded", "breading",
    "breads", "breath", "breathed", "breathing", "breaths", "brick", "bricked", "bricking",
    "bricks", "bridge", "bridged", "bridges", "bridging", "bright", "brighted", "brighting",
    "brights", "bring", "bringed", "bringing", "brings", "bringsed", "bringses", "bringsing",
    "broken", "brokened", "brokening", "brokens", "brother", "brothered", "brothering",
    "brothers", "brought", "broughted", "broughting", "broughts", "brown", "browned", "browning",
    "browns", "brush", "brushed", "brushes", "brushing", "bucket", "bucketed", "bucketing",
    "buckets", "building", "buildinged", "buildinging", "buildings", "bulb", "bulbed", "bulbing",
    "bulbs", "burn", "burned", "burning", "burns", "burst", "bursted", "bursting", "bursts",
    "business", "businessed", "businesses", "businessing", "but", "butter", "buttered",
    "buttering", "butters", "button", "buttoned", "buttoning", "buttons", "by", "cake", "caked",
    "cakes", "caking", "call", "called", "calleded", "calleding", "calleds", "calling", "calls",
    "callsed", "callses", "callsing", "came", "camed", "camera", "cameraed", "cameraing",
    "cameras", "cames", "caming", "can", "caned", "caning", "cannot", "cannoted", "cannoting",
    "cannots", "cans", "canvas", "canvased", "canvases", "canvasing", "car", "card", "carded",
    "carding", "cards", "care", "cared", "cares", "caring", "carriage", "carriaged", "carriages",
    "carriaging", "carried", "carrieded", "carrieding", "carrieds", "carries", "carry",
    "carrying", "cars", "cart", "carted", "carting", "carts", "cat", "cated", "cating", "cats",
    "cause", "caused", "causes", "causing", "certain", "certained", "certaining", "certains",
    "chain", "chained", "chaining", "chains", "chair", "chaired", "chairing", "chairs", "chalk",
    "chalked", "chalking", "chalks", "chance", "chanced", "chances", "chancing", "change",
    "changed", "changes", "changing", "cheap", "cheaped", "cheaping", "cheaps", "cheese",
    "cheesed", "cheeses", "cheesing", "chemical", "chemicaled", "chemicaling", "chemicals",
    "chest", "chested", "chesting", "chests", "chief", "chiefed", "chiefing", "chiefs", "child",
    "childed", "childing", "children", "childrened", "childrening", "childrens", "childs",
    "chin", "chined", "chining", "chins", "chose", "chosed", "chosen", "chosened", "chosening",
    "chosens", "choses", "chosing", "church", "churched", "churches", "churching", "circle",
    "circled", "circles", "circling", "citied", "cities", "city", "citying", "class", "classed",
    "classes", "classing", "clean", "cleaned", "cleaning", "cleans", "clear", "cleared",
    "clearing", "clears", "clock", "clocked", "clocking", "clocks", "close", "closed",
    "closeded", "closeding", "closeds", "closes", "closing", "cloth", "clothed", "clothing",
    "cloths", "cloud", "clouded", "clouding", "clouds", "coal", "coaled", "coaling", "coals",
    "coat", "coated", "coating", "coats", "cold", "colded", "colding", "colds", "collar",
    "collared", "collaring", "collars", "colour", "coloured", "colouring", "colours", "comb",
    "combed", "combing", "combs", "come", "comed", "comes", "comesed", "comeses", "comesing",
    "comfort", "comforted", "comforting", "comforts", "coming", "cominged", "cominging",
    "comings", "committee", "committeed", "committees", "committeing", "common", "commoned",
    "commoning", "commons", "companied", "companies", "company", "companying", "comparison",
    "comparisoned", "comparisoning", "comparisons", "competition", "competitioned",
    "competitioning", "competitions", "complete", "completed", "completes", "completing",
    "complex", "complexed", "complexes", "complexing", "condition", "conditioned",
    "conditioning", "conditions", "connection", "connectioned", "connectioning", "connections",
    "conscious", "conscioused", "consciouses", "consciousing", "control", "controled",
    "controling", "controls", "cook", "cooked", "cooking", "cooks", "copied", "copies", "copper",
    "coppered", "coppering", "coppers", "copy", "copying", "cord", "corded", "cording", "cords",
    "cork", "corked", "corking", "corks", "cotton", "cottoned", "cottoning", "cottons", "cough",
    "coughed", "coughing", "coughs", "could", "coulded", "coulding", "coulds", "countried",
    "countries", "country", "countrying", "cousin", "cousined", "cousining", "cousins", "cover",
    "covered", "covering", "covers", "cow", "cowed", "cowing", "cows", "crack", "cracked",
    "cracking", "cracks", "credit", "credited", "crediting", "credits", "cried", "crieded",
    "crieding", "crieds", "cries", "crime", "crimed", "crimes", "criming", "cruel", "crueled",
    "crueling", "cruels", "crush", "crushed", "crushes", "crushing", "cry", "crying", "cup",
    "cuped", "cuping", "cups", "current", "currented", "currenting", "currents", "curtain",
    "curtained", "curtaining", "curtains", "curve", "curved", "curves", "curving", "cushion",
    "cushioned", "cushioning", "cushions", "cut", "cuted", "cuting", "cuts", "cutsed", "cutses",
    "cutsing", "dad", "daded", "dading", "dads", "damage", "damaged", "damages", "damaging",
    "danger", "dangered", "dangering", "dangers", "dark", "darked", "darking", "darks", "data",
    "dataed", "dataing", "datas", "daughter", "daughtered", "daughtering", "daughters", "day",
    "dayed", "daying", "days", "dead", "deaded", "deading", "deads", "dear", "deared", "dearing",
    "dears", "death", "deathed", "deathing", "deaths", "debt", "debted", "debting", "debts",
    "december", "decembered", "decembering", "decembers", "decision", "decisioned",
    "decisioning", "decisions", "decrease", "decreased", "decreases", "decreasing", "deep",
    "deeped", "deeping", "deeps", "degree", "degreed", "degrees", "degreing", "delicate",
    "delicated", "delicates", "delicating", "dependent", "dependented", "dependenting",
    "dependents", "design", "designed", "designing", "designs", "desire", "desired", "desires",
    "desiring", "destruction", "destructioned", "destructioning", "destructions", "detail",
    "detailed", "detailing", "details", "development", "developmented", "developmenting",
    "developments", "did", "dided", "diding", "dids", "different", "differented", "differenting",
    "differents", "digestion", "digestioned", "digestioning", "digestions", "direction",
    "directioned", "directioning", "directions", "dirtied", "dirties", "dirty", "dirtying",
    "discoveried", "discoveries", "discovery", "discoverying", "discussion", "discussioned",
    "discussioning", "discussions", "disease", "diseased", "diseases", "diseasing", "disgust",
    "disgusted", "disgusting", "disgusts", "distance", "distanced", "distances", "distancing",
    "distribution", "distributioned", "distributioning", "distributions", "division",
    "divisioned", "divisioning", "divisions", "do", "doctor", "doctored", "doctoring", "doctors",
    "does", "doesed", "doeses", "doesing", "dog", "doged", "doging", "dogs", "doing", "doinged",
    "doinging", "doings", "done", "doned", "dones", "doning", "door", "doored", "dooring",
    "doors", "doubt", "doubted", "doubting", "doubts", "down", "drain", "drained", "draining",
    "drains", "drank", "dranked", "dranking", "dranks", "draw", "drawed", "drawer", "drawered",
    "drawering", "drawers", "drawing", "drawn", "drawned", "drawning", "drawns", "draws",
    "dress", "dressed", "dresses", "dressing", "drew", "drewed", "drewing", "drews", "dried",
    "dries", "drink", "drinked", "drinking", "drinks", "drive", "drived", "driven", "drivened",
    "drivening", "drivens", "drives", "driving", "drivinged", "drivinging", "drivings", "drop",
    "droped", "droping", "drops", "drove", "droved", "droves", "droving", "drunk", "drunked",
    "drunking", "drunks", "dry", "drying", "dust", "dusted", "dusting", "dusts", "each",
    "eached", "eaches", "eaching", "ear", "eared", "earing", "earlied", "earlies", "early",
    "earlying", "ears", "earth", "earthed", "earthing", "earths", "east", "easted", "easting",
    "easts", "eat", "eated", "eaten", "eatened", "eatening", "eatens", "eating", "eats", "edge",
    "edged", "edges", "edging", "education", "educationed", "educationing", "educations",
    "effect", "effected", "effecting", "effects", "egg", "egged", "egging", "eggs", "eight",
    "eighted", "eighting", "eights", "elastic", "elasticed", "elasticing", "elastics",
    "electric", "electriced", "electricing", "electrics", "eleven", "elevened", "elevening",
    "elevens", "else", "elsed", "elses", "elsing", "end", "ended", "ending", "ends", "engine",
    "engined", "engines", "engining", "english", "englished", "englishes", "englishing", "enjoy",
    "enjoyed", "enjoying", "enjoys", "enough", "enoughed", "enoughing", "enoughs", "equal",
    "equaled", "equaling", "equals", "error", "errored", "erroring", "errors", "even", "evened",
    "evening", "eveninged", "eveninging", "evenings", "evens", "event", "evented", "eventing",
    "events", "ever", "evered", "evering", "evers", "every", "everyone", "everyoned",
    "everyones", "everyoning", "everything", "everythinged", "everythinging", "everythings",
    "example", "exampled", "examples", "exampling", "exchange", "exchanged", "exchanges",
    "exchanging", "existence", "existenced", "existences", "existencing", "expansion",
    "expansioned", "expansioning", "expansions", "experience", "experienced", "experiences",
    "experiencing", "expert", "experted", "experting", "experts", "eye", "eyed", "eyes", "eying",
    "face", "faced", "faces", "facing", "fact", "facted", "facting", "facts", "fall", "falled",
    "falling", "falls", "false", "falsed", "falses", "falsing", "familied", "families", "family",
    "familying", "far", "fared", "faring", "farm", "farmed", "farmer", "farmered", "farmering",
    "farmers", "farming", "farms", "fars", "fast", "fasted", "fasting", "fasts", "fat", "fated",
    "father", "fathered", "fathering", "fathers", "fating", "fats", "fear", "feared", "fearing",
    "fears", "feather", "feathered", "feathering", "feathers", "februaried", "februaries",
    "february", "februarying", "feeble", "feebled", "feebles", "feebling", "feel", "feeled",
    "feeling", "feelinged", "feelinging", "feelings", "feels", "felt", "felted", "felting",
    "felts", "female", "femaled", "females", "femaling", "fertile", "fertiled", "fertiles",
    "fertiling", "few", "fewed", "fewing", "fews", "fiction", "fictioned", "fictioning",
    "fictions", "field", "fielded", "fielding", "fields", "fifteen", "fifteened", "fifteening",
    "fifteens", "fiftied", "fifties", "fifty", "fiftying", "fight", "fighted", "fighting",
    "fights", "find", "finded", "finding", "finds", "findsed", "findses", "findsing", "fine",
    "fined", "fines", "finger", "fingered", "fingering", "fingers", "fining", "finish",
    "finished", "finishes", "finishing", "fire", "fired", "fires", "firing", "first", "firsted",
    "firsting", "firsts", "fish", "fished", "fishes", "fishing", "five", "fived", "fives",
    "fiving", "fixed", "fixeded", "fixeding", "fixeds", "flag", "flaged", "flaging", "flags",
    "flame", "flamed", "flames", "flaming", "flat", "flated", "flating", "flats", "flew",
    "flewed", "flewing", "flews", "flied", "flies", "flight", "flighted", "flighting", "flights",
    "floor", "floored", "flooring", "floors", "flower", "flowered", "flowering", "flowers",
    "flown", "flowned", "flowning", "flowns", "fly", "flying", "fold", "folded", "folding",
    "folds", "food", "fooded", "fooding", "foods", "foolish", "foolished", "foolishes",
    "foolishing", "foot", "footed", "footing", "foots", "for", "force", "forced", "forces",
    "forcing", "fork", "forked", "forking", "forks", "form", "formed", "forming", "forms",
    "fortied", "forties", "forty", "fortying", "forward", "forwarded", "forwarding", "forwards",
    "found", "founded", "founding", "founds", "four", "foured", "fouring", "fours", "fourteen",
    "fourteened", "fourteening", "fourteens", "fourth", "fourthed", "fourthing", "fourths",
    "fowl", "fowled", "fowling", "fowls", "frame", "framed", "frames", "framing", "free",
    "freed", "frees", "freing", "frequent", "frequented", "frequenting", "frequents", "friday",
    "fridayed", "fridaying", "fridays", "friend", "friended", "friending", "friends", "from",
    "front", "fronted", "fronting", "fronts", "fruit", "fruited", "fruiting", "fruits", "full",
    "fulled", "fulling", "fulls", "future", "futured", "futures", "futuring", "garden",
    "gardened", "gardening", "gardens", "gave", "gaved", "gaves", "gaving", "general",
    "generaled", "generaling", "generals", "get", "geted", "geting", "gets", "getsed", "getses",
    "getsing", "getting", "gettinged", "gettinging", "gettings", "girl", "girled", "girling",
    "girls", "give", "gived", "given", "givened", "givening", "givens", "gives", "givesed",
    "giveses", "givesing", "giving", "givinged", "givinging", "givings", "glass", "glassed",
    "glasses", "glassing", "glove", "gloved", "gloves", "gloving", "go", "goat", "goated",
    "goating", "goats", "goes", "goesed", "goeses", "goesing", "going", "goinged", "goinging",
    "goings", "gold", "golded", "golding", "golds", "gone", "goned", "gones", "goning", "good",
    "gooded", "gooding", "goods", "got", "goted", "goting", "gots", "government", "governmented",
    "governmenting", "governments", "grain", "grained", "graining", "grains", "grandfather",
    "grandfathered", "grandfathering", "grandfathers", "grandmother", "grandmothered",
    "grandmothering", "grandmothers", "grass", "grassed", "grasses", "grassing", "gray",
    "grayed", "graying", "grays", "great", "greated", "greating", "greats", "green", "greened",
    "greening", "greens", "grew", "grewed", "grewing", "grews", "grey", "greyed", "greying",
    "greys", "grip", "griped", "griping", "grips", "group", "grouped", "grouping", "groups",
    "grow", "growed", "growing", "grown", "growned", "growning", "growns", "grows", "growth",
    "growthed", "growthing", "growths", "guide", "guided", "guides", "guiding", "gun", "guned",
    "guning", "guns", "had", "haded", "hading", "hads", "hair", "haired", "hairing", "hairs",
    "hammer", "hammered", "hammering", "hammers", "hand", "handed", "handing", "hands",
    "hanging", "hanginged", "hanginging", "hangings", "happen", "happened", "happeneded",
    "happeneding", "happeneds", "happening", "happens", "happied", "happies", "happy",
    "happying", "harbour", "harboured", "harbouring", "harbours", "hard", "harded", "harding",
    "hards", "harmonied", "harmonies", "harmony", "harmonying", "has", "hased", "hases",
    "hasing", "hat", "hate", "hated", "hates", "hating", "hats", "have", "having", "havinged",
    "havinging", "havings", "he", "head", "headed", "heading", "heads", "healthied", "healthies",
    "healthy", "healthying", "hear", "heard", "hearded", "hearding", "heards", "heared",
    "hearing", "hearinged", "hearinging", "hearings", "hears", "heart", "hearted", "hearting",
    "hearts", "heat", "heated", "heating", "heats", "held", "helded", "helding", "helds",
    "hello", "helloed", "helloing", "hellos", "help", "helped", "helping", "helps", "her",
    "here", "hered", "heres", "hering", "hers", "hersed", "herself", "herselfed", "herselfing",
    "herselfs", "herses", "hersing", "high", "highed", "highing", "highs", "him", "himed",
    "himing", "hims", "himself", "himselfed", "himselfing", "himselfs", "his", "hised", "hises",
    "hising", "historied", "histories", "history", "historying", "hit", "hited", "hiting",
    "hits", "hold", "holded", "holding", "holds", "holdsed", "holdses", "holdsing", "hole",
    "holed", "holes", "holing", "hollow", "hollowed", "hollowing", "hollows", "home", "homed",
    "homes", "homing", "hook", "hooked", "hooking", "hooks", "hope", "hoped", "hopes", "hoping",
    "horn", "horned", "horning", "horns", "horse", "horsed", "horses", "horsing", "hospital",
    "hospitaled", "hospitaling", "hospitals", "hot", "hoted", "hoting", "hots", "hour", "houred",
    "houring", "hours", "house", "housed", "houses", "housing", "how", "howed", "howing", "hows",
    "humour", "humoured", "humouring", "humours", "hundred", "hundreded", "hundreding",
    "hundreds", "hurt", "hurted", "hurting", "hurts", "ice", "iced", "ices", "icing", "idea",
    "ideaed", "ideaing", "ideas", "if", "ill", "illed", "illing", "ills", "important",
    "importanted", "importanting", "importants", "impulse", "impulsed", "impulses", "impulsing",
    "in", "increase", "increased", "increases", "increasing", "industried", "industries",
    "industry", "industrying", "ink", "inked", "inking", "inks", "insect", "insected",
    "insecting", "insects", "instrument", "instrumented", "instrumenting", "instruments",
    "insurance", "insuranced", "insurances", "insurancing", "interest", "interested",
    "interesting", "interests", "invention", "inventioned", "inventioning", "inventions", "iron",
    "ironed", "ironing", "irons", "is", "island", "islanded", "islanding", "islands", "it",
    "its", "itsed", "itself", "itselfed", "itselfing", "itselfs", "itses", "itsing", "januaried",
    "januaries", "january", "januarying", "jellied", "jellies", "jelly", "jellying", "jewel",
    "jeweled", "jeweling", "jewels", "join", "joined", "joining", "joins", "journey",
    "journeyed", "journeying", "journeys", "judge", "judged", "judges", "judging", "julied",
    "julies", "july", "julying", "jump", "jumped", "jumping", "jumps", "june", "juned", "junes",
    "juning", "just", "justed", "justing", "justs", "keep", "keeped", "keeping", "keeps",
    "kettle", "kettled", "kettles", "kettling", "key", "keyed", "keying", "keys", "kick",
    "kicked", "kicking", "kicks", "kind", "kinded", "kinding", "kinds", "kiss", "kissed",
    "kisses", "kissing", "knee", "kneed", "knees", "kneing", "knew", "knewed", "knewing",
    "knews", "knife", "knifed", "knifes", "knifing", "knot", "knoted", "knoting", "knots",
    "know", "knowed", "knowing", "knowledge", "knowledged", "knowledges", "knowledging", "known",
    "knowned", "knowning", "knowns", "knows", "knowsed", "knowses", "knowsing", "ladied",
    "ladies", "lady", "ladying", "land", "landed", "landing", "lands", "language", "languaged",
    "languages", "languaging", "large", "larged", "larges", "larging", "last", "lasted",
    "lasting", "lasts", "late", "lated", "later", "latered", "latering", "laters", "lates",
    "lating", "laugh", "laughed", "laughing", "laughs", "law", "lawed", "lawing", "laws", "lay",
    "layed", "laying", "lays", "lead", "leaded", "leading", "leads", "leaf", "leafed", "leafing",
    "leafs", "learn", "learned", "learneded", "learneding", "learneds", "learning", "learninged",
    "learninging", "learnings", "learns", "least", "leasted", "leasting", "leasts", "leather",
    "leathered", "leathering", "leathers", "leave", "leaved", "leaves", "leavesed", "leaveses",
    "leavesing", "leaving", "leavinged", "leavinging", "leavings", "led", "leded", "leding",
    "leds", "left", "lefted", "lefting", "lefts", "leg", "leged", "leging", "legs", "less",
    "lessed", "lesses", "lessing", "let", "leted", "leting", "lets", "letter", "lettered",
    "lettering", "letters", "level", "leveled", "leveling", "levels", "libraried", "libraries",
    "library", "librarying", "life", "lifed", "lifes", "lifing", "lift", "lifted", "lifting",
    "lifts", "light", "lighted", "lighting", "lights", "like", "liked", "likeded", "likeding",
    "likeds", "likes", "likesed", "likeses", "likesing", "liking", "limit", "limited",
    "limiting", "limits", "line", "lined", "linen", "linened", "linening", "linens", "lines",
    "lining", "lip", "liped", "liping", "lips", "liquid", "liquided", "liquiding", "liquids",
    "list", "listed", "listen", "listened", "listening", "listens", "listing", "lists", "little",
    "littled", "littles", "littling", "live", "lived", "liveded", "liveding", "liveds", "lives",
    "livesed", "liveses", "livesing", "living", "livinged", "livinging", "livings", "lock",
    "locked", "locking", "locks", "long", "longed", "longing", "longs", "look", "looked",
    "lookeded", "lookeding", "lookeds", "looking", "lookinged", "lookinging", "lookings",
    "looks", "loose", "loosed", "looses", "loosing", "loss", "lossed", "losses", "lossing",
    "lost", "losted", "losting", "losts", "loud", "louded", "louding", "louds", "love", "loved",
    "loves", "loving", "low", "lowed", "lowing", "lows", "machine", "machined", "machines",
    "machining", "made", "maded", "mades", "mading", "make", "maked", "makes", "making", "male",
    "maled", "males", "maling", "man", "manager", "managered", "managering", "managers", "maned",
    "manied", "manies", "maning", "mans", "many", "manying", "map", "maped", "maping", "maps",
    "march", "marched", "marches", "marching", "mark", "marked", "market", "marketed",
    "marketing", "markets", "marking", "marks", "married", "marrieded", "marrieding", "marrieds",
    "mass", "massed", "masses", "massing", "match", "matched", "matches", "matching", "material",
    "materialed", "materialing", "materials", "may", "mayed", "maying", "mays", "meal", "mealed",
    "mealing", "meals", "mean", "meaned", "meaning", "means", "meant", "meanted", "meanting",
    "meants", "measure", "measured", "measures", "measuring", "meat", "meated", "meating",
    "meats", "medical", "medicaled", "medicaling", "medicals", "meet", "meeted", "meeting",
    "meetinged", "meetinging", "meetings", "meets", "memoried", "memories", "memory",
    "memorying", "met", "metal", "metaled", "metaling", "metals", "meted", "method", "methoded",
    "methoding", "methods", "methodsed", "methodses", "methodsing", "meting", "mets", "middle",
    "middled", "middles", "middling", "might", "mighted", "mighting", "mights", "militaried",
    "militaries", "military", "militarying", "milk", "milked", "milking", "milks", "million",
    "millioned", "millioning", "millions", "mind", "minded", "minding", "minds", "mine", "mined",
    "mines", "mining", "minute", "minuted", "minutes", "minuting", "miss", "missed", "misses",
    "missing", "mist", "misted", "misting", "mists", "mixed", "mixeded", "mixeding", "mixeds",
    "model", "modeled", "modeling", "models", "modelsed", "modelses", "modelsing", "mom",
    "momed", "moming", "moms", "monday", "mondayed", "mondaying", "mondays", "money", "moneyed",
    "moneying", "moneys", "monkey", "monkeyed", "monkeying", "monkeys", "month", "monthed",
    "monthing", "months", "moon", "mooned", "mooning", "moons", "more", "mored", "mores",
    "moring", "morning", "morninged", "morninging", "mornings", "most", "mosted", "mosting",
    "mosts", "mother", "mothered", "mothering", "mothers", "motion", "motioned", "motioning",
    "motions", "mountain", "mountained", "mountaining", "mountains", "mouth", "mouthed",
    "mouthing", "mouths", "move", "moved", "moves", "moving", "mr", "mrs", "mrsed", "mrses",
    "mrsing", "much", "muched", "muches", "muching", "muscle", "muscled", "muscles", "muscling",
    "music", "musiced", "musicing", "musics", "must", "musted", "musting", "musts", "my",
    "myself", "myselfed", "myselfing", "myselfs", "nail", "nailed", "nailing", "nails", "name",
    "named", "names", "naming", "narrow", "narrowed", "narrowing", "narrows", "nation",
    "nationed", "nationing", "nations", "natural", "naturaled", "naturaling", "naturals", "near",
    "neared", "nearing", "nears", "necessaried", "necessaries", "necessary", "necessarying",
    "neck", "necked", "necking", "necks", "need", "needed", "needing", "needle", "needled",
    "needles", "needling", "needs", "nerve", "nerved", "nerves", "nerving", "net", "neted",
    "neting", "nets", "new", "newed", "newing", "news", "newsed", "newses", "newsing", "next",
    "nexted", "nexting", "nexts", "night", "nighted", "nighting", "nights", "nine", "nined",
    "nines", "nineteen", "nineteened", "nineteening", "nineteens", "ninetied", "nineties",
    "ninety", "ninetying", "nining", "no", "nobodied", "nobodies", "nobody", "nobodying",
    "noise", "noised", "noises", "noising", "none", "noned", "nones", "noning", "noon", "nooned",
    "nooning", "noons", "normal", "normaled", "normaling", "normals", "north", "northed",
    "northing", "norths", "nose", "nosed", "noses", "nosing", "not", "note", "noted", "notes",
    "nothing", "nothinged", "nothinging", "nothings", "noting", "november", "novembered",
    "novembering", "novembers", "now", "nowed", "nowing", "nows", "number", "numbered",
    "numbering", "numbers", "nurse", "nursed", "nurses", "nursing", "nut", "nuted", "nuting",
    "nuts", "observation", "observationed", "observationing", "observations", "october",
    "octobered", "octobering", "octobers", "of", "off", "offer", "offered", "offering", "offers",
    "office", "officed", "offices", "officing", "often", "oftened", "oftening", "oftens", "oil",
    "oiled", "oiling", "oils", "old", "olded", "olding", "olds", "on", "once", "onced", "onces",
    "oncing", "one", "oned", "ones", "onesed", "oneses", "onesing", "oning", "only", "open",
    "opened", "opening", "opens", "operation", "operationed", "operationing", "operations",
    "opinion", "opinioned", "opinioning", "opinions", "opposite", "opposited", "opposites",
    "oppositing", "or", "orange", "oranged", "oranges", "oranging", "order", "ordered",
    "ordering", "orders", "organization", "organizationed", "organizationing", "organizations",
    "ornament", "ornamented", "ornamenting", "ornaments", "other", "othered", "othering",
    "others", "our", "oured", "ouring", "ours", "oursed", "ourselves", "ourselvesed",
    "ourselveses", "ourselvesing", "ourses", "oursing", "out", "outed", "outing", "outs",
    "outside", "outsided", "outsides", "outsiding", "oven", "ovened", "ovening", "ovens", "over",
    "own", "owned", "owner", "ownered", "ownering", "owners", "owning", "owns", "page", "paged",
    "pages", "paging", "paid", "paided", "paiding", "paids", "pain", "pained", "paining",
    "pains", "paint", "painted", "painting", "paints", "paper", "papered", "papering", "papers",
    "papersed", "paperses", "papersing", "parallel", "paralleled", "paralleling", "parallels",
    "parcel", "parceled", "parceling", "parcels", "part", "parted", "parting", "parts", "past",
    "paste", "pasted", "pastes", "pasting", "pasts", "pay", "payed", "paying", "payment",
    "paymented", "paymenting", "payments", "pays", "peace", "peaced", "peaces", "peacing", "pen",
    "pencil", "penciled", "penciling", "pencils", "pened", "pening", "pens", "people", "peopled",
    "peoples", "peopling", "person", "personed", "personing", "persons", "physical",
    "physicaled", "physicaling", "physicals", "pick", "picked", "pickeded", "pickeding",
    "pickeds", "picking", "picks", "picture", "pictured", "pictures", "picturing", "pig",
    "piged", "piging", "pigs", "pin", "pined", "pining", "pink", "pinked", "pinking", "pinks",
    "pins", "pipe", "piped", "pipes", "piping", "place", "placed", "places", "placing", "plane",
    "planed", "planes", "planing", "plant", "planted", "planting", "plants", "plate", "plated",
    "plates", "plating", "play", "played", "playeded", "playeding", "playeds", "playing",
    "playinged", "playinging", "playings", "plays", "playsed", "playses", "playsing", "please",
    "pleased", "pleases", "pleasing", "pleasure", "pleasured", "pleasures", "pleasuring",
    "plough", "ploughed", "ploughing", "ploughs", "pocket", "pocketed", "pocketing", "pockets",
    "point", "pointed", "pointing", "points", "poison", "poisoned", "poisoning", "poisons",
    "police", "policed", "polices", "policing", "polish", "polished", "polishes", "polishing",
    "political", "politicaled", "politicaling", "politicals", "poor", "poored", "pooring",
    "poors", "porter", "portered", "portering", "porters", "position", "positioned",
    "positioning", "positions", "possible", "possibled", "possibles", "possibling", "pot",
    "potato", "potatoed", "potatoing", "potatos", "poted", "poting", "pots", "powder",
    "powdered", "powdering", "powders", "power", "powered", "powering", "powers", "present",
    "presented", "presenting", "presents", "price", "priced", "prices", "pricing", "print",
    "printed", "printing", "prints", "prison", "prisoned", "prisoning", "prisons", "private",
    "privated", "privates", "privating", "probable", "probabled", "probables", "probabling",
    "problem", "problemed", "probleming", "problems", "problemsed", "problemses", "problemsing",
    "process", "processed", "processes", "processing", "produce", "produced", "produces",
    "producing", "profit", "profited", "profiting", "profits", "propertied", "properties",
    "property", "propertying", "prose", "prosed", "proses", "prosing", "protest", "protested",
    "protesting", "protests", "public", "publiced", "publicing", "publics", "pull", "pulled",
    "pulling", "pulls", "pump", "pumped", "pumping", "pumps", "punishment", "punishmented",
    "punishmenting", "punishments", "purple", "purpled", "purples", "purpling", "purpose",
    "purposed", "purposes", "purposing", "push", "pushed", "pushes", "pushing", "put", "puted",
    "puting", "puts", "putsed", "putses", "putsing", "qualitied", "qualities", "quality",
    "qualitying", "question", "questioned", "questioning", "questions", "quick", "quicked",
    "quicking", "quicks", "quiet", "quieted", "quieting", "quiets", "quite", "quited", "quites",
    "quiting", "rail", "railed", "railing", "rails", "rain", "rained", "raining", "rains", "ran",
    "raned", "range", "ranged", "ranges", "ranging", "raning", "rans", "rat", "rate", "rated",
    "rates", "rating", "rats", "ray", "rayed", "raying", "rays", "reach", "reached", "reaches",
    "reaching", "reaction", "reactioned", "reactioning", "reactions", "read", "readed",
    "readied", "readies", "reading", "readinged", "readinging", "readings", "reads", "ready",
    "readying", "reason", "reasoned", "reasoning", "reasons", "receipt", "receipted",
    "receipting", "receipts", "record", "recorded", "recording", "records", "red", "reded",
    "reding", "reds", "regret", "regreted", "regreting", "regrets", "regular", "regulared",
    "regularing", "regulars", "relation", "relationed", "relationing", "relations", "religion",
    "religioned", "religioning", "religions", "representative", "representatived",
    "representatives", "representativing", "request", "requested", "requesting", "requests",
    "research", "researched", "researches", "researching", "respect", "respected", "respecting",
    "respects", "responsible", "responsibled", "responsibles", "responsibling", "rest", "rested",
    "resting", "rests", "result", "resulted", "resulting", "results", "resultsed", "resultses",
    "resultsing", "reward", "rewarded", "rewarding", "rewards", "rhythm", "rhythmed",
    "rhythming", "rhythms", "rice", "riced", "rices", "ricing", "ridden", "riddened",
    "riddening", "riddens", "ride", "rided", "rides", "riding", "right", "righted", "righting",
    "rights", "ring", "ringed", "ringing", "rings", "river", "rivered", "rivering", "rivers",
    "road", "roaded", "roading", "roads", "rod", "rode", "roded", "rodes", "roding", "rods",
    "roll", "rolled", "rolling", "rolls", "roof", "roofed", "roofing", "roofs", "room", "roomed",
    "rooming", "rooms", "root", "rooted", "rooting", "roots", "rough", "roughed", "roughing",
    "roughs", "round", "rounded", "rounding", "rounds", "rub", "rubed", "rubing", "rubs", "rule",
    "ruled", "rules", "ruling", "run", "runed", "runing", "runs", "sad", "saded", "sading",
    "sads", "safe", "safed", "safes", "safing", "said", "saided", "saiding", "saids", "sail",
    "sailed", "sailing", "sails", "salt", "salted", "salting", "salts", "same", "samed", "sames",
    "saming", "sand", "sanded", "sanding", "sands", "sang", "sanged", "sanging", "sangs", "sat",
    "sated", "sating", "sats", "saturday", "saturdayed", "saturdaying", "saturdays", "saw",
    "sawed", "sawing", "saws", "say", "sayed", "saying", "says", "saysed", "sayses", "saysing",
    "scale", "scaled", "scales", "scaling", "school", "schooled", "schooling", "schools",
    "science", "scienced", "sciences", "sciencing", "scissors", "scissorsed", "scissorses",
    "scissorsing", "screw", "screwed", "screwing", "screws", "sea", "seaed", "seaing", "seas",
    "seat", "seated", "seating", "seats", "second", "seconded", "seconding", "seconds", "secret",
    "secretaried", "secretaries", "secretary", "secretarying", "secreted", "secreting",
    "secrets", "see", "seed", "seeded", "seeding", "seeds", "seem", "seemed", "seeming", "seems",
    "seen", "seened", "seening", "seens", "sees", "seing", "selection", "selectioned",
    "selectioning", "selections", "self", "selfed", "selfing", "selfs", "sell", "selled",
    "selling", "sells", "send", "sended", "sending", "sends", "sense", "sensed", "senses",
    "sensing", "separate", "separated", "separates", "separating", "september", "septembered",
    "septembering", "septembers", "serious", "serioused", "seriouses", "seriousing", "servant",
    "servanted", "servanting", "servants", "set", "seted", "seting", "sets", "setsed", "setses",
    "setsing", "seven", "sevened", "sevening", "sevens", "seventeen", "seventeened",
    "seventeening", "seventeens", "seventied", "seventies", "seventy", "seventying", "sex",
    "sexed", "sexes", "sexing", "shade", "shaded", "shades", "shading", "shake", "shaked",
    "shakes", "shaking", "shall", "shalled", "shalling", "shalls", "shame", "shamed", "shames",
    "shaming", "sharp", "sharped", "sharping", "sharps", "she", "sheep", "sheeped", "sheeping",
    "sheeps", "shelf", "shelfed", "shelfing", "shelfs", "ship", "shiped", "shiping", "ships",
    "shirt", "shirted", "shirting", "shirts", "shock", "shocked", "shocking", "shocks", "shoe",
    "shoed", "shoes", "shoing", "short", "shorted", "shorting", "shorts", "should", "shoulded",
    "shoulding", "shoulds", "show", "showed", "showeded", "showeding", "showeds", "showing",
    "showinged", "showinging", "showings", "shown", "showned", "showning", "showns", "shows",
    "showsed", "showses", "showsing", "shut", "shuted", "shuting", "shuts", "side", "sided",
    "sides", "siding", "sign", "signed", "signing", "signs", "silk", "silked", "silking",
    "silks", "silver", "silvered", "silvering", "silvers", "simple", "simpled", "simples",
    "simpling", "sing", "singed", "singing", "sings", "sister", "sistered", "sistering",
    "sisters", "sit", "sited", "siting", "sits", "sitsed", "sitses", "sitsing", "sitting",
    "sittinged", "sittinging", "sittings", "six", "sixed", "sixes", "sixing", "sixteen",
    "sixteened", "sixteening", "sixteens", "sixtied", "sixties", "sixty", "sixtying", "size",
    "sized", "sizes", "sizing", "skied", "skies", "skin", "skined", "skining", "skins", "skirt",
    "skirted", "skirting", "skirts", "sky", "skying", "sleep", "sleeped", "sleeping", "sleeps",
    "slip", "sliped", "sliping", "slips", "slope", "sloped", "slopes", "sloping", "slow",
    "slowed", "slowing", "slows", "small", "smalled", "smalling", "smalls", "smash", "smashed",
    "smashes", "smashing", "smell", "smelled", "smelling", "smells", "smile", "smiled", "smiles",
    "smiling", "smoke", "smoked", "smokes", "smoking", "smooth", "smoothed", "smoothing",
    "smooths", "snake", "snaked", "snakes", "snaking", "sneeze", "sneezed", "sneezes",
    "sneezing", "snow", "snowed", "snowing", "snows", "so", "soap", "soaped", "soaping", "soaps",
    "societied", "societies", "society", "societying", "sock", "socked", "socking", "socks",
    "soft", "softed", "softing", "softs", "sold", "solded", "solding", "solds", "solid",
    "solided", "soliding", "solids", "some", "someone", "someoned", "someones", "someoning",
    "something", "somethinged", "somethinging", "somethings", "sometimes", "sometimesed",
    "sometimeses", "sometimesing", "son", "soned", "song", "songed", "songing", "songs",
    "soning", "sons", "soon", "sooned", "sooning", "soons", "sort", "sorted", "sorting", "sorts",
    "sound", "sounded", "sounding", "sounds", "soup", "souped", "souping", "soups", "south",
    "southed", "southing", "souths", "space", "spaced", "spaces", "spacing", "spade", "spaded",
    "spades", "spading", "speak", "speaked", "speaking", "speaks", "special", "specialed",
    "specialing", "specials", "spend", "spended", "spending", "spends", "spent", "spented",
    "spenting", "spents", "spoke", "spoked", "spoken", "spokened", "spokening", "spokens",
    "spokes", "spoking", "sponge", "sponged", "sponges", "sponging", "spoon", "spooned",
    "spooning", "spoons", "spring", "springed", "springing", "springs", "square", "squared",
    "squares", "squaring", "stage", "staged", "stages", "staging", "stamp", "stamped",
    "stamping", "stamps", "stand", "standed", "standing", "stands", "standsed", "standses",
    "standsing", "star", "stared", "staring", "stars", "start", "started", "starting", "starts",
    "statement", "statemented", "statementing", "statements", "station", "stationed",
    "stationing", "stations", "stay", "stayed", "stayeded", "stayeding", "stayeds", "staying",
    "stays", "steam", "steamed", "steaming", "steams", "steel", "steeled", "steeling", "steels",
    "stem", "stemed", "steming", "stems", "step", "steped", "steping", "steps", "stick",
    "sticked", "stickied", "stickies", "sticking", "sticks", "sticky", "stickying", "stiff",
    "stiffed", "stiffing", "stiffs", "still", "stilled", "stilling", "stills", "stitch",
    "stitched", "stitches", "stitching", "stocking", "stockinged", "stockinging", "stockings",
    "stomach", "stomached", "stomaches", "stomaching", "stone", "stoned", "stones", "stoning",
    "stood", "stooded", "stooding", "stoods", "stop", "stoped", "stoping", "stops", "store",
    "stored", "stores", "storied", "stories", "storing", "story", "storying", "straight",
    "straighted", "straighting", "straights", "strange", "stranged", "stranges", "stranging",
    "street", "streeted", "streeting", "streets", "stretch", "stretched", "stretches",
    "stretching", "strong", "stronged", "stronging", "strongs", "structure", "structured",
    "structures", "structuring", "student", "studented", "studenting", "students", "studied",
    "studieded", "studieding", "studieds", "studies", "studiesed", "studieses", "studiesing",
    "study", "studying", "substance", "substanced", "substances", "substancing", "such",
    "sudden", "suddened", "suddening", "suddens", "sugar", "sugared", "sugaring", "sugars",
    "suggestion", "suggestioned", "suggestioning", "suggestions", "summer", "summered",
    "summering", "summers", "sun", "sunday", "sundayed", "sundaying", "sundays", "suned", "sung",
    "sunged", "sunging", "sungs", "suning", "suns", "support", "supported", "supporting",
    "supports", "surprise", "surprised", "surprises", "surprising", "sweet", "sweeted",
    "sweeting", "sweets", "swim", "swimed", "swiming", "swims", "system", "systemed",
    "systeming", "systems", "table", "tabled", "tables", "tabling", "tail", "tailed", "tailing",
    "tails", "take", "taked", "taken", "takened", "takening", "takens", "takes", "takesed",
    "takeses", "takesing", "taking", "takinged", "takinging", "takings", "talk", "talked",
    "talking", "talks", "tall", "talled", "talling", "talls", "taste", "tasted", "tastes",
    "tasting", "taught", "taughted", "taughting", "taughts", "tax", "taxed", "taxes", "taxing",
    "teach", "teached", "teacher", "teachered", "teachering", "teachers", "teaches", "teaching",
    "teachinged", "teachinging", "teachings", "tell", "telled", "telling", "tells", "tellsed",
    "tellses", "tellsing", "ten", "tendencied", "tendencies", "tendency", "tendencying", "tened",
    "tening", "tens", "test", "tested", "testeded", "testeding", "testeds", "testing",
    "testinged", "testinging", "testings", "tests", "testsed", "testses", "testsing", "th",
    "than", "that", "the", "their", "theired", "theiring", "theirs", "theirsed", "theirses",
    "theirsing", "them", "themed", "theming", "thems", "themselves", "themselvesed",
    "themselveses", "themselvesing", "then", "thened", "thening", "thens", "theoried",
    "theories", "theory", "theorying", "there", "thered", "theres", "thering", "these", "thesed",
    "theses", "thesing", "they", "thick", "thicked", "thicking", "thicks", "thin", "thined",
    "thing", "thinged", "thinging", "things", "thining", "think", "thinked", "thinking",
    "thinks", "thinksed", "thinkses", "thinksing", "thins", "third", "thirded", "thirding",
    "thirds", "thirteen", "thirteened", "thirteening", "thirteens", "thirtied", "thirties",
    "thirty", "thirtying", "this", "those", "thosed", "thoses", "thosing", "though", "thought",
    "thoughted", "thoughting", "thoughts", "thousand", "thousanded", "thousanding", "thousands",
    "thread", "threaded", "threading", "threads", "three", "threed", "threes", "threing",
    "threw", "threwed", "threwing", "threws", "throat", "throated", "throating", "throats",
    "through", "thrown", "throwned", "throwning", "throwns", "thumb", "thumbed", "thumbing",
    "thumbs", "thunder", "thundered", "thundering", "thunders", "thursday", "thursdayed",
    "thursdaying", "thursdays", "ticket", "ticketed", "ticketing", "tickets", "tight", "tighted",
    "tighting", "tights", "till", "tilled", "tilling", "tills", "time", "timed", "times",
    "timing", "tin", "tined", "tining", "tins", "tired", "tireded", "tireding", "tireds", "to",
    "today", "todayed", "todaying", "todays", "toe", "toed", "toes", "together", "togethered",
    "togethering", "togethers", "toing", "told", "tolded", "tolding", "tolds", "tomorrow",
    "tomorrowed", "tomorrowing", "tomorrows", "tongue", "tongued", "tongues", "tonguing", "too",
    "tooed", "tooing", "took", "tooked", "tooking", "tooks", "toos", "tooth", "toothed",
    "toothing", "tooths", "top", "toped", "toping", "tops", "touch", "touched", "touches",
    "touching", "towards", "towardsed", "towardses", "towardsing", "town", "towned", "towning",
    "towns", "trade", "traded", "trades", "trading", "train", "trained", "training", "trains",
    "transport", "transported", "transporting", "transports", "tray", "trayed", "traying",
    "trays", "tree", "treed", "trees", "treing", "trick", "tricked", "tricking", "tricks",
    "trouble", "troubled", "troubles", "troubling", "trousers", "trousersed", "trouserses",
    "trousersing", "true", "trued", "trues", "truing", "tuesday", "tuesdayed", "tuesdaying",
    "tuesdays", "turn", "turned", "turning", "turns", "twelve", "twelved", "twelves", "twelving",
    "twentied", "twenties", "twenty", "twentying", "twist", "twisted", "twisting", "twists",
    "two", "twoed", "twoing", "twos", "umbrella", "umbrellaed", "umbrellaing", "umbrellas",
    "uncle", "uncled", "uncles", "uncling", "under", "understand", "understanded",
    "understanding", "understands", "unit", "united", "uniting", "units", "until", "untiled",
    "untiling", "untils", "up", "upon", "uponed", "uponing", "upons", "us", "use", "used",
    "useded", "useding", "useds", "uses", "usesed", "useses", "usesing", "using", "usinged",
    "usinging", "usings", "value", "valued", "values", "valuing", "verse", "versed", "verses",
    "versing", "very", "vessel", "vesseled", "vesseling", "vessels", "view", "viewed", "viewing",
    "views", "violent", "violented", "violenting", "violents", "voice", "voiced", "voices",
    "voicing", "waiting", "waitinged", "waitinging", "waitings", "walk", "walked", "walking",
    "walks", "wall", "walled", "walling", "walls", "want", "wanted", "wanteded", "wanteding",
    "wanteds", "wanting", "wants", "wantsed", "wantses", "wantsing", "war", "wared", "waring",
    "warm", "warmed", "warming", "warms", "wars", "was", "wased", "wases", "wash", "washed",
    "washes", "washing", "wasing", "waste", "wasted", "wastes", "wasting", "watch", "watched",
    "watches", "watching", "water", "watered", "watering", "waters", "wave", "waved", "waves",
    "waving", "wax", "waxed", "waxes", "waxing", "way", "wayed", "waying", "ways", "we",
    "weather", "weathered", "weathering", "weathers", "wednesday", "wednesdayed", "wednesdaying",
    "wednesdays", "week", "weeked", "weeking", "weeks", "weight", "weighted", "weighting",
    "weights", "well", "welled", "welling", "wells", "went", "wented", "wenting", "wents",
    "were", "wered", "weres", "wering", "west", "wested", "westing", "wests", "wet", "weted",
    "weting", "wets", "wheel", "wheeled", "wheeling", "wheels", "when", "whened", "whening",
    "whens", "where", "whered", "wheres", "whering", "whether", "whethered", "whethering",
    "whethers", "which", "whiched", "whiches", "whiching", "whied", "whies", "while", "whip",
    "whiped", "whiping", "whips", "whistle", "whistled", "whistles", "whistling", "white",
    "whited", "whites", "whiting", "who", "whole", "wholed", "wholes", "wholing", "whose",
    "whosed", "whoses", "whosing", "why", "whying", "wide", "wided", "widelied", "widelies",
    "widely", "widelying", "wides", "widing", "will", "willed", "willing", "wills", "win",
    "wind", "winded", "winding", "window", "windowed", "windowing", "windows", "winds", "wine",
    "wined", "wines", "wing", "winged", "winging", "wings", "wining", "wins", "winter",
    "wintered", "wintering", "winters", "wire", "wired", "wires", "wiring", "wise", "wised",
    "wises", "wising", "with", "without", "withouted", "withouting", "withouts", "woman",
    "womaned", "womaning", "womans", "won", "woned", "woning", "wons", "wood", "wooded",
    "wooding", "woods", "wool", "wooled", "wooling", "wools", "word", "worded", "wording",
    "words", "work", "worked", "working", "works", "world", "worlded", "worlding", "worlds",
    "worm", "wormed", "worming", "worms", "would", "woulded", "woulding", "woulds", "wound",
    "wounded", "wounding", "wounds", "writing", "writinged", "writinging", "writings", "written",
    "writtened", "writtening", "writtens", "wrong", "wronged", "wronging", "wrongs", "wrote",
    "wroted", "wrotes", "wroting", "year", "yeared", "yearing", "years", "yellow", "yellowed",
    "yellowing", "yellows", "yes", "yesed", "yeses", "yesing", "yesterday", "yesterdayed",
    "yesterdaying", "yesterdays", "yet", "yeted", "yeting", "yets", "you", "young", "younged",
    "younging", "youngs", "your", "youred", "youring", "yours", "yoursed", "yourself",
    "yourselfed", "yourselfing", "yourselfs", "yourses", "yoursing", "zero", "zeroed", "zeroing",
    "zeros", };

// Country names and common aliases for affiliation tagging.
const char* const kCountries[] = {
    "Afghanistan", "Albania", "Algeria", "Andorra", "Angola", "Argentina", "Armenia",
    "Australia", "Austria", "Azerbaijan", "Bahamas", "Bahrain", "Bangladesh", "Barbados",
    "Belarus", "Belgium", "Belize", "Benin", "Bhutan", "Bolivia", "Bosnia and Herzegovina",
    "Botswana", "Brazil", "Brunei", "Bulgaria", "Burkina Faso", "Burundi", "Cambodia",
    "Cameroon", "Canada", "Chad", "Chile", "China", "Colombia", "Costa Rica", "Croatia", "Cuba",
    "Cyprus", "Czech Republic", "Czechia", "Denmark", "Djibouti", "Dominican Republic",
    "Ecuador", "Egypt", "El Salvador", "Estonia", "Eswatini", "Ethiopia", "Fiji", "Finland",
    "France", "Gabon", "Gambia", "Georgia", "Germany", "Ghana", "Greece", "Guatemala", "Guinea",
    "Guyana", "Haiti", "Honduras", "Hungary", "Iceland", "India", "Indonesia", "Iran", "Iraq",
    "Ireland", "Israel", "Italy", "Jamaica", "Japan", "Jordan", "Kazakhstan", "Kenya", "Kuwait",
    "Kyrgyzstan", "Laos", "Latvia", "Lebanon", "Lesotho", "Liberia", "Libya", "Liechtenstein",
    "Lithuania", "Luxembourg", "Madagascar", "Malawi", "Malaysia", "Maldives", "Mali", "Malta",
    "Mauritania", "Mauritius", "Mexico", "Moldova", "Monaco", "Mongolia", "Montenegro",
    "Morocco", "Mozambique", "Myanmar", "Namibia", "Nepal", "Netherlands", "New Zealand",
    "Nicaragua", "Niger", "Nigeria", "North Korea", "North Macedonia", "Norway", "Oman",
    "Pakistan", "Panama", "Papua New Guinea", "Paraguay", "Peru", "Philippines", "Poland",
    "Portugal", "Qatar", "Republic of Korea", "Romania", "Russia", "Russian Federation",
    "Rwanda", "Saudi Arabia", "Senegal", "Serbia", "Seychelles", "Sierra Leone", "Singapore",
    "Slovakia", "Slovenia", "Somalia", "South Africa", "South Korea", "South Sudan", "Spain",
    "Sri Lanka", "Sudan", "Suriname", "Sweden", "Switzerland", "Syria", "Taiwan", "Tajikistan",
    "Tanzania", "Thailand", "Togo", "Trinidad and Tobago", "Tunisia", "Turkey", "Turkmenistan",
    "UK", "USA", "Uganda", "Ukraine", "United Arab Emirates", "United Kingdom", "United States",
    "United States of America", "Uruguay", "Uzbekistan", "Venezuela", "Vietnam", "Yemen",
    "Zambia", "Zimbabwe",
};

template <std::size_t N>
std::vector<std::string> to_vector(const char* const (&arr)[N]) {
    return std::vector<std::string>(arr, arr + N);
}

}  // namespace

const std::vector<std::string>& bundled_stopwords() {
    static const std::vector<std::string> v = to_vector(kStopwords);
    return v;
}

const std::vector<std::string>& bundled_abbreviations() {
    static const std::vector<std::string> v = to_vector(kAbbreviations);
    return v;
}

const std::vector<std::string>& bundled_easy_words() {
    static const std::vector<std::string> v = to_vector(kEasyWords);
    return v;
}

const std::vector<std::string>& bundled_country_names() {
    static const std::vector<std::string> v = to_vector(kCountries);
    return v;
}

}  // namespace corpuscope
