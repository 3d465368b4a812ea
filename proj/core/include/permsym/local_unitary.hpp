#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "permsym/gsym.hpp"
#include "permsym/state_vector.hpp"

namespace permsym {

/// One-qubit unitary factor. Consumers check unitarity with is_unitary; the
/// constructors below produce unitary matrices by construction.
using LocalUnitary1Q = Eigen::Matrix2cd;
/// n one-qubit factors acting as a tensor product, factor k on qubit k.
using LocalUnitaryNQ = std::vector<LocalUnitary1Q>;

bool is_unitary(const LocalUnitary1Q& U, double tol = 1e-10);

LocalUnitary1Q pauli_x();
LocalUnitary1Q pauli_y();
LocalUnitary1Q pauli_z();

/// exp(-i angle/2 axis.sigma); the induced Bloch rotation is by `angle`
/// radians about `axis` (right-hand rule). The axis must be unit length.
LocalUnitary1Q rotation_unitary(const Eigen::Vector3d& axis, double angle);

/// Image of the Bloch vector v under conjugation by U.
Eigen::Vector3d bloch_image(const LocalUnitary1Q& U, const Eigen::Vector3d& v);

/// The rotation product R_{phi-(pi/2-theta),Z} R_{-pi/2,(cos(pi/2-theta),
/// sin(pi/2-theta),0)} R_{pi/2,Y} taking the north pole to the Bloch point P.
LocalUnitary1Q compose_north_to(const BlochPoint& P);

/// One-qubit U with U^{x3} |M3(1,0)> = |M3(a,b)> up to global phase.
LocalUnitary1Q m3_connector(std::complex<double> a, std::complex<double> b);

/// Three factors whose tensor product takes |M3(1,0)> to the conjugate of
/// |M3(a,b)> up to global phase.
LocalUnitaryNQ m3_conjugate_connector(std::complex<double> a, std::complex<double> b);

/// For U of one of the two rotation forms used on the M3 family
/// (exp(i pi/4 (alpha X + beta Y)) with alpha^2+beta^2 = 1, or
/// exp(-i u/2 Z)), the exact 2x2 matrix acting on the (a, b) coordinates:
/// U^{x3} |M3(a,b)> = |M3(a',b')| with (a',b') given by the returned matrix.
/// Throws InvalidInputError for any other operator form.
Eigen::Matrix2cd induced_m3_action(const LocalUnitary1Q& U);

/// Applies the factor U to the given qubit (1-based) of psi.
StateVector apply_single(const LocalUnitary1Q& U, int qubit, const StateVector& psi);
/// Applies the full tensor product; requires one factor per qubit.
StateVector apply_local(const LocalUnitaryNQ& ops, const StateVector& psi);

}  // namespace permsym
