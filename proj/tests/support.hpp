#pragma once

#include "trigal/error.hpp"

#include <gtest/gtest.h>

#include <string>

namespace trigal::testing {

/// Runs `fn` and returns the code it throws; fails the test if nothing is thrown.
template <class Fn>
std::string thrown_code(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return std::string(to_string(e.code()));
    }
    ADD_FAILURE() << "no trigal::Error thrown";
    return "";
}

} // namespace trigal::testing
