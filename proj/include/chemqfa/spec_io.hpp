// Copyright 2026 The chemqfa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef CHEMQFA_SPEC_IO_HPP
#define CHEMQFA_SPEC_IO_HPP

#include <string>
#include <string_view>

#include "chemqfa/machine_spec.hpp"

namespace chemqfa {

/// Text format for machines; see docs/machine_format.md for the grammar.
/// Every nonzero matrix entry is written as a row, with doubles in shortest
/// round-trip form, so write(read(write(m))) == write(m).
std::string write_spec(const TwoWayQfaSpec& spec);

/// Parses the row-level description without completing it.
PartialTable read_partial_table(std::string_view text);

/// Parses a machine. When every (symbol, source) column has rows the matrices
/// are installed exactly as written, without unitarity checks, so validate()
/// can report problems. Otherwise the table is completed. Explicit `padded`
/// lines replace the padding list computed by completion.
TwoWayQfaSpec read_spec(std::string_view text);

}  // namespace chemqfa

#endif  // CHEMQFA_SPEC_IO_HPP
