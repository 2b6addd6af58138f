#pragma once

#include <gtest/gtest.h>

#include "minoru/error.hpp"

// Passes when `stmt` throws minoru::Error of the given kind.
#define EXPECT_MINORU_ERROR(stmt, expected_kind)                                  \
  do {                                                                            \
    try {                                                                         \
      (void)(stmt);                                                               \
      ADD_FAILURE() << #stmt " did not throw";                                    \
    } catch (const ::minoru::Error& caught_) {                                    \
      EXPECT_EQ(caught_.kind(), (expected_kind)) << caught_.what();               \
    }                                                                             \
  } while (false)
