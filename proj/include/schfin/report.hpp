#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace schfin {

// Deterministic structured verdicts: machine-readable key=value rows plus
// human-readable notes. Partial checks must carry their "sampled"/"assumed"/
// "criterion" qualifiers in the emitted text.
class Report {
public:
    explicit Report(std::string op) { row("op", std::move(op)); }

    void row(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
    void row(std::string key, bool value) { row(std::move(key), std::string(value ? "true" : "false")); }
    void row(std::string key, int value) { row(std::move(key), std::to_string(value)); }
    void note(std::string line) { notes_.push_back(std::move(line)); }

    void set_verdict(bool v) { verdict_ = v; }
    std::optional<bool> verdict() const { return verdict_; }

    const std::vector<std::pair<std::string, std::string>>& rows() const { return rows_; }
    const std::vector<std::string>& notes() const { return notes_; }

    std::string render_rows() const;
    std::string render_text() const;

private:
    std::vector<std::pair<std::string, std::string>> rows_;
    std::vector<std::string> notes_;
    std::optional<bool> verdict_;
};

} // namespace schfin
