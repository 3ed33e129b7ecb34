#pragma once

#include <stdexcept>
#include <string>

namespace goldman {

enum class Errc {
  ambiguous_class,
  not_hyperbolic,
  coincident_points,
  coincident_geodesics,
  point_not_on_geodesic,
  not_a_triangle,
  axes_disjoint,
  bad_letter,
  degenerate_params,
  not_discrete,
  no_distinguished_curve,
  non_primitive_collision,
  triple_point,
  tangent_degenerate,
  no_stabilization,
  tracking_lost,
  degenerate_point,
  invalid_argument,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

const char* errc_name(Errc code);

}  // namespace goldman
