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

#ifndef ENVC_UTF8_H_
#define ENVC_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace envc {

// Returns true if `bytes` is well-formed UTF-8 (no overlongs, no surrogates,
// nothing above U+10FFFF).
bool IsValidUtf8(std::string_view bytes);

// Appends the UTF-8 encoding of `cp` to `out`.
void AppendUtf8(char32_t cp, std::string* out);

std::string EncodeUtf8(const std::u32string& cps);

// A UTF-8 string indexed by Unicode scalar. All cue offsets in this library
// are scalar indices into one of these.
//
// Ill-formed byte sequences decode to U+FFFD, one scalar per offending byte,
// so that Slice() still returns the original bytes.
class Utf8Text {
 public:
  explicit Utf8Text(std::string_view bytes);

  size_t size() const { return scalars_.size(); }
  bool empty() const { return scalars_.empty(); }
  char32_t operator[](size_t i) const { return scalars_[i]; }

  // Bytes of scalars [start, end). Requires start <= end <= size().
  std::string_view Slice(size_t start, size_t end) const;

  const std::string& bytes() const { return bytes_; }
  const std::u32string& scalars() const { return scalars_; }

 private:
  std::string bytes_;
  std::u32string scalars_;
  // byte_offset_[i] is where scalar i starts; one extra entry for the end.
  std::vector<size_t> byte_offset_;
};

// ASCII-only character classes. Case-sensitive cue detectors (capitals,
// alternating case, elongation) operate on ASCII letters only.
inline bool IsAsciiUpper(char32_t c) { return c >= U'A' && c <= U'Z'; }
inline bool IsAsciiLower(char32_t c) { return c >= U'a' && c <= U'z'; }
inline bool IsAsciiLetter(char32_t c) { return IsAsciiUpper(c) || IsAsciiLower(c); }
inline bool IsAsciiDigit(char32_t c) { return c >= U'0' && c <= U'9'; }
inline bool IsWordChar(char32_t c) { return IsAsciiLetter(c) || IsAsciiDigit(c) || c == U'_'; }
inline char32_t AsciiToLower(char32_t c) { return IsAsciiUpper(c) ? c + 32 : c; }
inline char32_t AsciiToUpper(char32_t c) { return IsAsciiLower(c) ? c - 32 : c; }
inline bool IsSpace(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' || c == U'\v' ||
         c == 0xA0;
}

}  // namespace envc

#endif  // ENVC_UTF8_H_
