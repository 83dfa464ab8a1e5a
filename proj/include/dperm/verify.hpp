#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dperm/poly.hpp"

namespace dperm {

constexpr std::uint64_t kDefaultSeed = 1729;

struct CheckOptions {
    int n_max = -1;             // -1 picks the check's default
    std::string mode = "auto";  // auto | symbolic | specialized
    std::uint64_t seed = kDefaultSeed;
    int seeds = 5;
    int points = 20;
    bool timing = true;
};

struct CheckResult {
    std::string id;
    std::string mode;
    int n_max = 0;
    std::uint64_t seed = 0;
    std::string status;  // pass | fail | counterexample
    bool report_only = false;
    std::vector<std::string> details;
    double millis = 0;

    bool ok() const { return status == "pass" || report_only; }
};

struct CheckInfo {
    std::string id;
    std::string summary;
    bool report_only = false;
    int default_n = 0;
};

const std::vector<CheckInfo>& check_catalog();
bool is_check(const std::string& id);
CheckResult run_check(const std::string& id, const CheckOptions& opt = {});

std::string result_json(const CheckResult& r);
std::string report_json(const std::vector<CheckResult>& rs);

// The variable table and enumerated polynomials shared by all checks.
const VarTablePtr& verify_vars();
const Poly& family_polynomial(const std::string& family_id, int n);

// Distinct integers from [2, 97] assigned in name order; names outside keep stay symbolic.
std::map<int, mpz_class> draw_assignment(const VarTablePtr& vars, const std::vector<int>& used,
                                         const std::vector<std::string>& keep, std::uint64_t seed);
std::string assignment_str(const VarTablePtr& vars, const std::map<int, mpz_class>& a);

}  // namespace dperm
