#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tpsim {

// Thrown when parameters push the model outside its economically meaningful
// region, e.g. a consumption jump that lands at c <= 0.
class model_error : public std::runtime_error {
public:
    explicit model_error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration. The message lists every violated constraint, one
// per line, so a bad config can be fixed in a single pass.
class config_error : public std::runtime_error {
public:
    explicit config_error(std::vector<std::string> violations)
        : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const { return violations_; }

private:
    static std::string join(const std::vector<std::string>& vs) {
        std::string msg = "invalid configuration:";
        for (const auto& v : vs) msg += "\n  - " + v;
        return msg;
    }
    std::vector<std::string> violations_;
};

}  // namespace tpsim
