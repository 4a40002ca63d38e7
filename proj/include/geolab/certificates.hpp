#pragma once

#include <string>
#include <vector>

#include "geolab/scalar.hpp"

namespace geolab {

enum class Verdict { Pass, GenericPass, Fail, Error };

inline std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::GenericPass: return "generic-pass";
        case Verdict::Fail: return "fail";
        case Verdict::Error: return "error";
    }
    return "error";
}

// Merge two verdicts: fail dominates, then error, then generic.
inline Verdict combine(Verdict a, Verdict b) {
    if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
    if (a == Verdict::Error || b == Verdict::Error) return Verdict::Error;
    if (a == Verdict::GenericPass || b == Verdict::GenericPass) return Verdict::GenericPass;
    return Verdict::Pass;
}

// Certificate policy for a nonvanishing requirement: a constant nonzero
// scalar certifies the property everywhere; a nonconstant one passes off
// its zero locus (the numerator polynomial); zero fails.
struct CertInfo {
    Verdict verdict;
    Scalar value;
    std::string describe(const std::vector<std::string>& names, const std::string& label) const {
        switch (verdict) {
            case Verdict::Pass:
                return label + " = " + value.str(names) + " (nonzero constant)";
            case Verdict::GenericPass:
                return label + " = " + value.str(names) + " nonzero off { " +
                       value.num().str(names) + " = 0 }";
            default:
                return label + " = 0";
        }
    }
};

inline CertInfo classify_certificate(const Scalar& s) {
    if (s.is_zero()) return {Verdict::Fail, s};
    if (s.is_constant()) return {Verdict::Pass, s};
    return {Verdict::GenericPass, s};
}

struct CheckResult {
    Verdict verdict = Verdict::Fail;
    std::vector<std::string> witness;
    std::vector<std::string> certificate;
};

} // namespace geolab
