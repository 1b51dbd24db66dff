#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace carlitz {

/// Named fields describing one checked case, in insertion order.
struct Witness {
    std::vector<std::pair<std::string, std::string>> fields;

    Witness& add(std::string key, std::string value) {
        fields.emplace_back(std::move(key), std::move(value));
        return *this;
    }
    const std::string* find(std::string_view key) const {
        for (const auto& [k, v] : fields)
            if (k == key) return &v;
        return nullptr;
    }
};

/// Outcome of a mechanical theorem check over a finite range. `cases`
/// counts every instance examined; `witnesses` keeps the informative ones
/// and `failures` every counterexample.
struct VerificationReport {
    std::string suite;
    std::size_t cases = 0;
    std::vector<Witness> witnesses;
    std::vector<Witness> failures;
    std::vector<std::string> notes;

    VerificationReport() = default;
    explicit VerificationReport(std::string name) : suite(std::move(name)) {}

    bool passed() const noexcept { return failures.empty(); }

    void merge(VerificationReport other) {
        cases += other.cases;
        for (auto& w : other.witnesses) witnesses.push_back(std::move(w));
        for (auto& f : other.failures) failures.push_back(std::move(f));
        for (auto& n : other.notes) notes.push_back(std::move(n));
    }
};

}  // namespace carlitz
