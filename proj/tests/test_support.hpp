#pragma once

#include <gtest/gtest.h>

#include "lgeom/error.hpp"

namespace lgeom::testing {

/// Runs fn and checks that it throws GeometryError of the given kind.
template <class F>
void expect_kind(ErrorKind kind, F&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected GeometryError " << to_string(kind);
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

}  // namespace lgeom::testing
