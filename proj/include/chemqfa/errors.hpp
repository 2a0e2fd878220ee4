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

#ifndef CHEMQFA_ERRORS_HPP
#define CHEMQFA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace chemqfa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input word contains a symbol outside the machine's (or language's) alphabet.
class SymbolError : public Error {
 public:
  SymbolError(char symbol, std::size_t position)
      : Error("symbol '" + std::string(1, symbol) + "' at position " + std::to_string(position) +
              " is not in the alphabet"),
        symbol_(symbol),
        position_(position) {}

  char symbol() const { return symbol_; }
  std::size_t position() const { return position_; }

 private:
  char symbol_;
  std::size_t position_;
};

/// The specified columns of a partial transition table cannot be extended to a unitary.
class CompletionError : public Error {
 public:
  CompletionError(char symbol, std::string first, std::string second, const std::string& why)
      : Error("cannot complete V_" + std::string(1, symbol) + ": columns " + first + " and " + second +
              " " + why),
        symbol_(symbol),
        first_(std::move(first)),
        second_(std::move(second)) {}

  char symbol() const { return symbol_; }
  const std::string& first_state() const { return first_; }
  const std::string& second_state() const { return second_; }

 private:
  char symbol_;
  std::string first_;
  std::string second_;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Structural problems with a machine or spec file (unknown state, bad role, shape mismatch).
class SpecError : public Error {
 public:
  using Error::Error;
};

class NondeterminismError : public Error {
 public:
  using Error::Error;
};

class UnknownSpecies : public Error {
 public:
  UnknownSpecies(std::string species, std::size_t index)
      : Error("unknown species '" + species + "' at aliquot " + std::to_string(index)),
        species_(std::move(species)),
        index_(index) {}

  const std::string& species() const { return species_; }
  std::size_t index() const { return index_; }

 private:
  std::string species_;
  std::size_t index_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace chemqfa

#endif  // CHEMQFA_ERRORS_HPP
