#pragma once

#include "geolab/scene.hpp"

namespace geolab {

inline constexpr const char* kGeolabVersion = "0.1.0";
inline constexpr unsigned long kDefaultSeed = 12022;
inline constexpr int kDefaultSamples = 4;

struct CheckRecord {
    std::string name; // invocation string, e.g. "contact(eta)"
    Verdict verdict = Verdict::Error;
    std::vector<std::string> witness;
    std::vector<std::string> certificate;
    double ms = 0.0;
};

struct Report {
    unsigned long seed = kDefaultSeed;
    int samples = kDefaultSamples;
    std::string version = kGeolabVersion;
    std::vector<CheckRecord> records;
};

// Runs every check of the scene in declaration order. Deterministic for a
// fixed (scene, seed); checker exceptions become verdict "error". Wall
// times are recorded only when `timings` is set so that default reports are
// byte-stable.
Report run_checks(const Scene& s, unsigned long seed, int samples, bool timings = false);

// format: JSON with stable key order, or a plain-text table.
std::string emit_report(const Report& r, bool json);

// 0 if every verdict is pass/generic-pass, 1 if any fail, 2 if any error.
// `strict` demotes generic-pass to fail.
int report_exit_code(const Report& r, bool strict);

} // namespace geolab
