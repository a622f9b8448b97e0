#pragma once

#include <stdexcept>
#include <string>

namespace fermatlab {

// Thrown when a configurable resource budget (S-pairs, matrix cells, ...) is
// exhausted.  Callers translate this into an UNDECIDED verdict; it must never
// be swallowed into a wrong answer.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::string stage, unsigned long long limit)
        : std::runtime_error("budget exceeded in " + stage +
                             " (limit " + std::to_string(limit) + ")"),
          stage_(std::move(stage)), limit_(limit) {}

    const std::string& stage() const { return stage_; }
    unsigned long long limit() const { return limit_; }

private:
    std::string stage_;
    unsigned long long limit_;
};

}  // namespace fermatlab
