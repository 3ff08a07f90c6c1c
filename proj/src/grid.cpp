#include "covsim/grid.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace covsim {

ScalarField ScalarField::zeros(const GridSpec& spec) {
  if (!spec.valid()) {
    throw std::invalid_argument("ScalarField: invalid grid spec");
  }
  return {spec, Eigen::ArrayXd::Zero(spec.cells())};
}

ScalarField ScalarField::constant(const GridSpec& spec, double value) {
  ScalarField f = zeros(spec);
  f.values.setConstant(value);
  return f;
}

void require_compatible(const ScalarField& a, const ScalarField& b,
                        const char* op) {
  if (!a.compatible_with(b)) {
    std::ostringstream msg;
    msg << op << ": incompatible grids (" << a.spec.nx << "x" << a.spec.ny
        << " vs " << b.spec.nx << "x" << b.spec.ny << ")";
    throw std::invalid_argument(msg.str());
  }
}

ScalarField decay_accumulate(const ScalarField& info, const ScalarField& d,
                             double delta, double dt) {
  require_compatible(info, d, "decay_accumulate");
  if (!(dt > 0.0)) {
    throw std::invalid_argument("decay_accumulate: dt must be > 0");
  }
  if (delta > 0.0) {
    throw std::invalid_argument("decay_accumulate: delta must be <= 0");
  }
  ScalarField out{info.spec, {}};
  if (delta == 0.0) {
    out.values = info.values + d.values * dt;
  } else {
    const double fac = std::exp(delta * dt);
    const double gain = std::expm1(delta * dt) / delta;
    out.values = info.values * fac + d.values * gain;
  }
  return out;
}

ScalarField tdf_persistent(const ScalarField& info, double c_star) {
  if (!(c_star > 0.0)) {
    throw std::invalid_argument("tdf_persistent: C* must be > 0");
  }
  ScalarField out{info.spec, (c_star - info.values).max(0.0)};
  return out;
}

ScalarField tef(const ScalarField& d_star, const ScalarField& d) {
  require_compatible(d_star, d, "tef");
  return {d_star.spec, d_star.values - d.values};
}

namespace {

double pow_pos(double base, int exponent) {
  // exponent >= 1, base >= 0
  double acc = base;
  for (int i = 1; i < exponent; ++i) acc *= base;
  return acc;
}

}  // namespace

double penalty_value(double e, const PenaltySpec& penalty) {
  if (e <= 0.0) return 0.0;
  return pow_pos(e, penalty.exponent);
}

double penalty_derivative(double e, const PenaltySpec& penalty) {
  if (e <= 0.0) return 0.0;
  return penalty.exponent * pow_pos(e, penalty.exponent - 1);
}

double error_index(const ScalarField& e, const ScalarField& sigma,
                   const PenaltySpec& penalty) {
  require_compatible(e, sigma, "error_index");
  const Eigen::ArrayXd pos = e.values.max(0.0);
  double acc;
  if (penalty.exponent == 2) {
    acc = (pos * pos * sigma.values).sum();
  } else {
    acc = (pos.pow(penalty.exponent) * sigma.values).sum();
  }
  return acc * e.spec.cell_area();
}

void dump_field(std::ostream& os, const std::string& name,
                const ScalarField& field) {
  const GridSpec& g = field.spec;
  char buf[64];
  os << "field " << name << ' ' << g.nx << ' ' << g.ny;
  for (double v : {g.ox, g.oy, g.width, g.height}) {
    std::snprintf(buf, sizeof(buf), " %.17g", v);
    os << buf;
  }
  os << '\n';
  for (int iy = 0; iy < g.ny; ++iy) {
    for (int ix = 0; ix < g.nx; ++ix) {
      std::snprintf(buf, sizeof(buf), "%.17g", field.at(ix, iy));
      os << buf << (ix + 1 == g.nx ? '\n' : ' ');
    }
  }
}

ScalarField load_field(std::istream& is, std::string* name) {
  std::string tag, field_name;
  GridSpec g;
  if (!(is >> tag >> field_name >> g.nx >> g.ny >> g.ox >> g.oy >> g.width >>
        g.height) ||
      tag != "field") {
    throw std::runtime_error("load_field: malformed header");
  }
  if (!g.valid()) {
    throw std::runtime_error("load_field: invalid grid in header");
  }
  ScalarField f = ScalarField::zeros(g);
  for (int i = 0; i < g.cells(); ++i) {
    if (!(is >> f.values[i])) {
      throw std::runtime_error("load_field: truncated value block");
    }
  }
  if (name) *name = field_name;
  return f;
}

}  // namespace covsim
