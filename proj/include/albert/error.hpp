#pragma once

#include <stdexcept>
#include <string>

namespace albert {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid constructor or operation parameters (violated precondition).
struct parameter_error : error {
  using error::error;
};

// Mixed scalars or elements from different towers/algebras.
struct descriptor_mismatch : error {
  using error::error;
};

struct not_invertible : error {
  using error::error;
};

// One-parameter family evaluated where a factor degenerates.
struct pole_error : error {
  using error::error;
};

// Sampled similarity certification found a counterexample.
struct certification_error : error {
  using error::error;
};

// A bounded search (unitary with prescribed norm, factorization) ran out.
struct search_exhausted : error {
  using error::error;
};

struct config_error : error {
  using error::error;
};

}  // namespace albert
