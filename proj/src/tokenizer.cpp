#include "driftqa/tokenizer.hpp"

#include <cctype>

#include "driftqa/errors.hpp"

namespace driftqa {

int WhitespaceTokenCounter::count(std::string_view text) const {
    int n = 0;
    bool in_token = false;
    for (char c : text) {
        bool space = std::isspace(static_cast<unsigned char>(c)) != 0;
        if (!space && !in_token) ++n;
        in_token = !space;
    }
    return n;
}

std::unique_ptr<TokenCounter> make_token_counter(const std::string& id) {
    if (id == "whitespace" || id.empty()) return std::make_unique<WhitespaceTokenCounter>();
    throw FormatError("unknown token counter: " + id);
}

}  // namespace driftqa
