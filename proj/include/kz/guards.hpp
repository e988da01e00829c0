#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kz {

// Runaway-input guards. CLI flags override the process-wide defaults
// before any task runs; library code only reads them.
struct Guards {
    int64_t max_pairs = 4'000'000;    // Buchberger S-pair budget per basis
    int max_sat_iter = 64;            // saturation colon iterations
    int max_res_length = 64;          // free resolution stages
    int64_t oracle_dim_cap = 200'000; // dense oracle: rows*cols budget
};

Guards& default_guards();

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// thrown when a guard trips; callers may record and continue
class GuardError : public Error {
public:
    using Error::Error;
};

// malformed user input (bad prime, parse error, ring mismatch, ...)
class InputError : public Error {
public:
    using Error::Error;
};

} // namespace kz
