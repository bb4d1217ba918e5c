#pragma once

#include <transgress/cli.hpp>
#include <transgress/error.hpp>

#include <gtest/gtest.h>

namespace testing_support {

using namespace transgress;

inline const Registry& reg() { return Registry::standard(); }
inline const Maps& maps() { return Maps::standard(); }

inline RingPtr ring(SpaceId s, CoeffRing c) { return reg().ring_of(s, c); }

inline Element parse(const RingPtr& r, const std::string& text) { return parse_element(text, r, reg()); }
inline Element parse(SpaceId s, CoeffRing c, const std::string& text) { return parse(ring(s, c), text); }

template <class F>
Errc error_of(F f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return Errc::InvariantViolation;
}

}  // namespace testing_support

#define EXPECT_TEXT(element, text) EXPECT_EQ(transgress::to_text(element), text)
