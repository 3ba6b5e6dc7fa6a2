// Copyright 2026 The LSE Authors
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

// types.hpp — Model specification, error codes and shared domain types

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace lse {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

enum class Bc { Obc, Pbc };

enum class Errc {
    invalid_argument,
    dimension_cap,
    not_converged,
    not_relaxed,
    ill_conditioned,
    ambiguous_gap,
    io_failure,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

// One chain of L sites with nearest-neighbor monitoring. Site indices are
// 1-based in prose and file formats, 0-based in code; the map is i_code = i - 1.
struct ModelSpec {
    int sites = 2;          // L
    Bc bc = Bc::Pbc;
    double gamma = 1.0;     // monitoring rate, >= 0
    double hopping = 1.0;   // t, > 0
    bool feedback = true;   // false selects the bare two-site measurement model

    void validate() const {
        if (sites < 2) throw Error(Errc::invalid_argument, "ModelSpec: L must be >= 2");
        if (gamma < 0.0) throw Error(Errc::invalid_argument, "ModelSpec: gamma must be >= 0");
        if (!(hopping > 0.0)) throw Error(Errc::invalid_argument, "ModelSpec: t must be > 0");
    }

    // Number of two-site bonds carrying a jump operator.
    int bonds() const { return bc == Bc::Pbc ? sites : sites - 1; }

    ModelSpec with_sites(int L) const {
        ModelSpec s = *this;
        s.sites = L;
        return s;
    }
    ModelSpec with_gamma(double g) const {
        ModelSpec s = *this;
        s.gamma = g;
        return s;
    }
};

inline const char* bc_name(Bc bc) { return bc == Bc::Pbc ? "pbc" : "obc"; }
inline const char* model_name(bool feedback) { return feedback ? "feedback" : "measure"; }

enum class BasisKind { Site, Sector, Vectorized };

// Trace-one Hermitian positive-semidefinite matrix in a declared basis.
struct DensityMatrix {
    Matrix mat;
    BasisKind basis = BasisKind::Site;

    double trace() const { return mat.trace().real(); }

    // Checks trace one, Hermiticity and the smallest eigenvalue within the
    // stated floors. Throws on violation.
    void validate(double herm_tol = 1e-10, double psd_floor = -1e-8) const;
};

}  // namespace lse
