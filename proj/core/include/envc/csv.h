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

// Minimal RFC 4180 reader and writer.

#ifndef ENVC_CSV_H_
#define ENVC_CSV_H_

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace envc {

struct CsvRecord {
  std::vector<std::string> fields;
  size_t line = 0;  // 1-based line where the record starts
};

class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  // Next record, or std::nullopt at end of input. An unterminated quoted field
  // is an error. Blank lines are skipped.
  absl::StatusOr<std::optional<CsvRecord>> Next();

 private:
  std::istream& in_;
  size_t line_ = 0;
};

// Quotes a field whenever RFC 4180 requires it.
std::string CsvEscape(std::string_view field);
std::string CsvLine(const std::vector<std::string>& fields);

}  // namespace envc

#endif  // ENVC_CSV_H_
