// Copyright 2026 The simt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <doctest.h>

#include "support/oracles.hpp"

// Asserts that `expr` throws simt::Error with the given kind.
#define CHECK_ERROR_KIND(expr, expected_kind)        \
  do {                                               \
    bool threw = false;                              \
    try {                                            \
      expr;                                          \
    } catch (const simt::Error& caught) {            \
      threw = true;                                  \
      CHECK(caught.kind() == (expected_kind));       \
    }                                                \
    CHECK_MESSAGE(threw, "expected " #expr " to throw"); \
  } while (0)
