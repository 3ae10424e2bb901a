#ifndef RAYCLASS_RECIPROCITY_HPP
#define RAYCLASS_RECIPROCITY_HPP

#include "rayclass/class_forms.hpp"
#include "rayclass/qseries.hpp"

#include <string>
#include <vector>

namespace rayclass {

/// 2x2 matrix over Z/NZ, entries kept in [0, N).
class MatModN {
public:
    MatModN() = default;
    MatModN(long a, long b, long c, long d, long level);

    static MatModN identity(long level) { return MatModN(1, 0, 0, 1, level); }

    long a() const { return a_; }
    long b() const { return b_; }
    long c() const { return c_; }
    long d() const { return d_; }
    long level() const { return level_; }

    long det() const;
    bool is_invertible() const;
    MatModN negated() const { return MatModN(-a_, -b_, -c_, -d_, level_); }

    /// Fixed representative of {M, -M}: scanning (c, d, a, b), the first entry
    /// x with 2x != 0 mod N is brought into [1, N/2).
    MatModN canonical_pm() const;

    MatModN operator*(const MatModN& rhs) const;
    bool operator==(const MatModN& rhs) const = default;
    std::string to_string() const;

private:
    long a_ = 1, b_ = 0, c_ = 0, d_ = 1;
    long level_ = 1;
};

/// W_{N,theta_K} / {+-1}: the invertible (t - B s, -C s; s, t) mod N, one per
/// sign class, ordered by (s, t) of the representative. Identity comes first.
/// Throws UnsupportedError for N < 3 or d_K > -7.
std::vector<MatModN> w_group(long N, const CMField& field);

/// Stevenhagen's matrix for Q, assembled prime by prime and glued by CRT.
MatModN u_Q(const ReducedForm& Q, long N, const CMField& field);

/// Row vector r times M, reduced to [0, N)^2.
IndexPair act_on_index(const IndexPair& r, const MatModN& M);

/// (alpha, Q) labelling one element of Gal(K_(N)/K).
struct GaloisLabel {
    MatModN alpha;
    ReducedForm form;
    MatModN u;
    Complex theta_eval;

    MatModN composite() const { return alpha * u; }
};

/// W/{+-1} x C(d_K), forms outermost. The first label is (1, unit form).
std::vector<GaloisLabel> galois_labels(long N, const CMField& field, const PrecisionContext& ctx);

} // namespace rayclass

#endif
