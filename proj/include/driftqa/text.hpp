#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace driftqa {

std::string trim(std::string_view s);
std::string lower_ascii(std::string_view s);

/// Whitespace-separated tokens, text kept verbatim.
std::vector<std::string> split_whitespace(std::string_view s);

/// Lowercased alphanumeric runs; the unit used by the lexical retriever.
std::vector<std::string> word_tokens(std::string_view s);

std::vector<std::string> split_lines(std::string_view s);

/// Splits on terminal punctuation (. ! ?) keeping the delimiter attached.
std::vector<std::string> split_sentences(std::string_view s);

bool contains(std::string_view haystack, std::string_view needle);

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string fnv1a64_hex(std::string_view data);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace driftqa
