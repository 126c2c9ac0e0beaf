#pragma once

#include <stdexcept>
#include <string>

namespace koszul {

// Input complex fails structural or regularity validation.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Complex is valid but violates a theorem hypothesis (purity, codimension-one
// connectivity) required by the requested operation.
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed JSON input or unknown format/field selector.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The independent Koszulity criteria disagreed; always a bug, never swallowed.
struct DisagreementError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Word enumeration exceeded the configured cap.
struct BlowupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A map does not descend to the requested quotient; indicates a construction bug.
struct IllDefinedMapError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace koszul
