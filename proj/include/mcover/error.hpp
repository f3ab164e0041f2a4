// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace mcover {

// Bad input: out-of-range vertex or colour, violated precondition, malformed file.
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// A construction that a lemma guarantees has failed. This always indicates a
// bug or a gap in a case analysis; `witness()` carries a serialized dump.
class ImpossibleByLemma : public std::logic_error {
  public:
    ImpossibleByLemma(const std::string& what, std::string witness = {})
        : std::logic_error(what), witness_(std::move(witness)) {}
    const std::string& witness() const noexcept { return witness_; }

  private:
    std::string witness_;
};

} // namespace mcover
