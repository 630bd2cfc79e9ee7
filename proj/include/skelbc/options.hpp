/*
Copyright 2026 the skelbc authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

namespace skelbc {

/// Two path lengths compare equal when they differ by at most this much.
/// With integer weights every comparison is exact and the tolerance is inert.
inline constexpr double kDefaultEps = 1e-9;

struct Options {
  double eps = kDefaultEps;
  /// Worker cap for the per-source loops; 0 means hardware concurrency.
  int threads = 0;
};

}  // namespace skelbc
