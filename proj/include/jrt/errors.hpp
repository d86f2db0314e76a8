#pragma once

#include <stdexcept>
#include <string>

namespace jrt {

/// A structural identity that must hold for every valid input failed; the
/// id names the violated check and the detail carries a witness.
struct check_failure : std::runtime_error {
    std::string check_id;
    std::string detail;

    check_failure(std::string id, std::string d)
        : std::runtime_error("check '" + id + "' failed: " + d),
          check_id(std::move(id)),
          detail(std::move(d)) {}
};

/// Input exceeds an implementation bound (e.g. the saturation support cap).
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace jrt
