#pragma once

#include <string>
#include <vector>

namespace corpuscope {

// Bundled defaults; each can be replaced by a user file (one token per line,
// UTF-8, '#' comments).
const std::vector<std::string>& bundled_stopwords();
const std::vector<std::string>& bundled_abbreviations();
const std::vector<std::string>& bundled_easy_words();
const std::vector<std::string>& bundled_country_names();

}  // namespace corpuscope
