#pragma once

#include "qhopf/morphism.hpp"
#include "qhopf/category.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qhopf {

struct relation_violated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One verified relation: name, outcome, and the first differing entry on
/// failure (degree block, matrix coordinates, both exact values).
struct Witness {
    std::string relation;
    int degree = 0;
    int row = 0;
    int col = 0;
    std::string lhs;
    std::string rhs;

    std::string describe() const {
        return relation + " differs at degree " + std::to_string(degree) + ", entry (" +
               std::to_string(row) + "," + std::to_string(col) + "): " + lhs + " vs " + rhs;
    }
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::optional<Witness> witness;
};

struct AxiomReport {
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    const CheckResult* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }

    void record(const std::string& name, const Morphism& lhs, const Morphism& rhs) {
        auto diff = first_difference(lhs, rhs);
        if (!diff) {
            checks.push_back(CheckResult{name, true, std::nullopt});
            return;
        }
        Witness w{name, diff->degree, diff->row, diff->col, format_field_element(diff->lhs),
                  format_field_element(diff->rhs)};
        checks.push_back(CheckResult{name, false, std::move(w)});
    }

    void record_scalar(const std::string& name, const FieldElement& lhs, const FieldElement& rhs) {
        if (lhs == rhs) {
            checks.push_back(CheckResult{name, true, std::nullopt});
            return;
        }
        Witness w{name, 0, 0, 0, format_field_element(lhs), format_field_element(rhs)};
        checks.push_back(CheckResult{name, false, std::move(w)});
    }

    void record_flag(const std::string& name, bool ok, const std::string& detail = "") {
        if (ok) {
            checks.push_back(CheckResult{name, true, std::nullopt});
            return;
        }
        Witness w{name, 0, 0, 0, detail.empty() ? "false" : detail, "true"};
        checks.push_back(CheckResult{name, false, std::move(w)});
    }

    void merge(const AxiomReport& other, const std::string& prefix = "") {
        for (const auto& c : other.checks) {
            CheckResult copy = c;
            copy.name = prefix.empty() ? c.name : prefix + "." + c.name;
            checks.push_back(std::move(copy));
        }
    }

    void require_pass(const char* where) const {
        if (const CheckResult* f = first_failure()) {
            std::string msg = std::string(where) + ": " + f->name;
            if (f->witness) msg += " (" + f->witness->describe() + ")";
            throw relation_violated(msg);
        }
    }
};

} // namespace qhopf
