// Copyright 2026 The Theseus Authors
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

#include <string>
#include <string_view>

#include "theseus/target.hpp"

namespace theseus {

/// Parses a target expression:
///
///   target     := constructor | gate | expression
///   constructor:= ghz(n,d) | bell(d) | cnot(dc,dt)
///   gate       := 'gate' '(' ket '->' expression (',' ket '->' expression)* ')'
///   expression := ['+'|'-'] term (('+'|'-') term)*
///   term       := [coefficient ['*']] ket
///   coefficient:= decimal | decimal 'i' | 'i' | '(' complex ')'
///   ket        := '|' digit+ '>'
///
/// The result is normalized. Throws ParseError with the offending offset for
/// syntax errors and mismatched ket lengths, InvalidParameters for zero norm.
Target parse_target(std::string_view text);

/// Text that parse_target maps back to an equal target (up to rounding in
/// the last bit).
std::string format_target(const Target& t);

}  // namespace theseus
