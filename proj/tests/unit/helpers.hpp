#pragma once

#include <doctest.h>
#include <optional>

#include "qlogic/error.hpp"

namespace test {

/// The ErrorKind raised by `f`, or nullopt if it returns normally.
template <class F>
std::optional<qlogic::ErrorKind> error_kind(F&& f) {
    try {
        f();
    } catch (const qlogic::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

}  // namespace test

#define CHECK_RAISES(expr, kind) CHECK(test::error_kind([&] { (void)(expr); }) == qlogic::ErrorKind::kind)
