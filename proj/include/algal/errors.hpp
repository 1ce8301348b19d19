#pragma once

#include <stdexcept>
#include <string>

namespace algal {

// Error categories used across the library. Tests match on the code, not
// the message text.
enum class Errc {
    malformed_file,
    unsupported_task,
    degenerate_dataset,
    invalid_data,
    degenerate_split,
    missing_class,
    shape_mismatch,
    empty_evaluation,
    invalid_budget,
    invalid_action,
    episode_done,
    empty_pool,
    empty_input,
    insufficient_group,
    invalid_step,
    invalid_distribution,
    domain,
    checksum_mismatch,
    version_mismatch,
    report,
    config,
    io,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
    throw Error(code, msg);
}

inline void require(bool cond, Errc code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

} // namespace algal
