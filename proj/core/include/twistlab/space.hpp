#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace twistlab {

inline constexpr double kInfExponent = std::numeric_limits<double>::infinity();

/// Block sizes above this bound are treated as effectively unbounded.
inline constexpr long long kBlockSizeCap = 1LL << 62;

/// Symbolic space constructor; drives norm dispatch.
///
/// Variants: Lp(p, k), Schreier, Tsirelson, Convexify2(base), Dual(base),
/// L2SumBlocks(blocks), SymTsirelson2, Ell2. p = infinity is the sup-norm
/// sentinel. Lp without a dimension is unbounded.
class SpaceSpec {
public:
    enum class Kind {
        Lp,
        Schreier,
        Tsirelson,
        Convexify2,
        Dual,
        L2SumBlocks,
        SymTsirelson2,
        Ell2,
    };

    struct Block {
        double p;       // >= 1 or infinity
        long long size; // saturating at kBlockSizeCap
    };

    static SpaceSpec lp(double p, std::optional<long long> dim = std::nullopt);
    static SpaceSpec schreier();
    static SpaceSpec tsirelson();
    static SpaceSpec convexify2(SpaceSpec base);
    static SpaceSpec dual(SpaceSpec base);
    static SpaceSpec l2_sum_blocks(std::vector<Block> blocks);
    static SpaceSpec sym_tsirelson2();
    static SpaceSpec ell2();

    /// Parses a CLI space name: l1, l2, linf, lp:<p>[:<k>], schreier, s2,
    /// tsirelson, t2, ts2, dual:<name>, blocks:<p>,<k>[;<p>,<k>...].
    static SpaceSpec from_name(const std::string& name);

    Kind kind() const { return kind_; }
    double p() const { return p_; }
    const std::optional<long long>& dim() const { return dim_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    const SpaceSpec& base() const { return *base_; }

    std::string name() const;

private:
    Kind kind_ = Kind::Ell2;
    double p_ = 2.0;
    std::optional<long long> dim_;
    std::vector<Block> blocks_;
    std::shared_ptr<const SpaceSpec> base_;
};

/// Conjugate exponent; 1 <-> infinity, 2 fixed.
double conjugate_exponent(double p);

}  // namespace twistlab
