// Copyright 2026 The envc Authors.
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

// Adapters between std::string_view and Abseil string utilities. The system
// Abseil may define absl::string_view as its own type, which does not convert
// implicitly from std::string_view.

#ifndef ENVC_SRC_STRINGS_H_
#define ENVC_SRC_STRINGS_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"

namespace envc {

inline absl::string_view ToAbsl(std::string_view s) { return {s.data(), s.size()}; }
inline std::string_view FromAbsl(absl::string_view s) { return {s.data(), s.size()}; }

namespace strings_internal {
template <typename T>
const T& CatArg(const T& v) {
  return v;
}
inline absl::string_view CatArg(std::string_view s) { return ToAbsl(s); }
}  // namespace strings_internal

template <typename... Args>
std::string StrCat(const Args&... args) {
  return absl::StrCat(strings_internal::CatArg(args)...);
}

inline std::string_view StripAsciiWhitespace(std::string_view s) {
  return FromAbsl(absl::StripAsciiWhitespace(ToAbsl(s)));
}
inline std::string AsciiStrToLower(std::string_view s) { return absl::AsciiStrToLower(ToAbsl(s)); }
inline bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  return absl::EqualsIgnoreCase(ToAbsl(a), ToAbsl(b));
}
template <typename Int>
bool SimpleAtoi(std::string_view s, Int* out) {
  return absl::SimpleAtoi(ToAbsl(s), out);
}
inline bool SimpleAtod(std::string_view s, double* out) { return absl::SimpleAtod(ToAbsl(s), out); }

}  // namespace envc

#endif  // ENVC_SRC_STRINGS_H_
