#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace driftqa {

/// Token-counting contract. Chunk budgets are expressed in whatever unit an
/// implementation counts; the shipped default counts whitespace-separated
/// words. Counters must be additive across whitespace-joined strings so that
/// greedy chunk filling by per-sentence counts stays within budget.
class TokenCounter {
public:
    virtual ~TokenCounter() = default;
    virtual int count(std::string_view text) const = 0;
    virtual std::string id() const = 0;
};

class WhitespaceTokenCounter final : public TokenCounter {
public:
    int count(std::string_view text) const override;
    std::string id() const override { return "whitespace"; }
};

/// Returns the counter registered under `id`; throws FormatError otherwise.
std::unique_ptr<TokenCounter> make_token_counter(const std::string& id);

}  // namespace driftqa
