// SPDX-License-Identifier: MIT
//
// Error taxonomy for the kcm library.  Each exception class corresponds to a
// distinct failure mode with its own process exit code in the CLI:
//
//   DomainError        -> exit 2  (invalid input: config, arguments, ranges)
//   DegenerateError    -> exit 3  (model sits on a boundary between classes;
//                                  results would not be trustworthy)
//   NumericalError     -> exit 4  (conditioning/convergence failure inside an
//                                  otherwise valid computation)
//   ContradictionError -> exit 4  (two independent methods disagree; always a
//                                  bug or a borderline model, never silent)

#pragma once

#include <stdexcept>
#include <string>

namespace kcm {

// Invalid argument or configuration: out-of-range parameter, negative state,
// malformed config file, unknown growth law name.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// The model is degenerate for the requested analysis: a sign quantity sits in
// the zero band, a required fixed point is missing or non-isolated, or an
// eigenvalue sits on the unit circle.
class DegenerateError : public std::runtime_error {
public:
    explicit DegenerateError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical procedure failed: ill-conditioned eigenvectors, singular solve
// inside an iteration, non-convergence.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Two methods that must agree produced different answers.
class ContradictionError : public std::logic_error {
public:
    explicit ContradictionError(const std::string& what) : std::logic_error(what) {}
};

} // namespace kcm
