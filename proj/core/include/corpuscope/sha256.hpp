#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace corpuscope {

// Incremental SHA-256. Used for cache keys and the report's file manifest.
class Sha256 {
public:
    Sha256();
    void update(const void* data, std::size_t len);
    void update(const std::string& s) { update(s.data(), s.size()); }
    std::string hex_digest();  // finalizes; further updates are invalid

private:
    void process_block(const std::uint8_t* block);

    std::uint32_t state_[8];
    std::uint64_t bit_count_ = 0;
    std::uint8_t buffer_[64];
    std::size_t buffer_len_ = 0;
};

std::string sha256_hex(const std::string& data);
std::string sha256_file_hex(const std::filesystem::path& path);

}  // namespace corpuscope
