#ifndef WEYLKIT_TEST_HELPERS_HPP
#define WEYLKIT_TEST_HELPERS_HPP

#include "weylkit/numeric.hpp"

#include <doctest.h>

// Checks both that `expr` throws weylkit::Error and that the kind matches.
#define CHECK_ERROR_KIND(expr, k)                     \
    do {                                              \
        bool caught_ = false;                         \
        try {                                         \
            (void)(expr);                             \
        } catch (const weylkit::Error& e_) {          \
            caught_ = true;                           \
            CHECK(e_.kind() == (k));                  \
        }                                             \
        CHECK_MESSAGE(caught_, #expr " did not throw"); \
    } while (0)

#endif
