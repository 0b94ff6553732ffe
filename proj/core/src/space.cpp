#include "twistlab/space.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace twistlab {

SpaceSpec SpaceSpec::lp(double p, std::optional<long long> dim) {
    if (!(p >= 1.0)) throw std::invalid_argument("SpaceSpec::lp: p must be >= 1");
    if (dim && *dim < 1) throw std::invalid_argument("SpaceSpec::lp: dimension must be positive");
    SpaceSpec s;
    s.kind_ = Kind::Lp;
    s.p_ = p;
    s.dim_ = dim;
    return s;
}

SpaceSpec SpaceSpec::schreier() {
    SpaceSpec s;
    s.kind_ = Kind::Schreier;
    return s;
}

SpaceSpec SpaceSpec::tsirelson() {
    SpaceSpec s;
    s.kind_ = Kind::Tsirelson;
    return s;
}

SpaceSpec SpaceSpec::convexify2(SpaceSpec base) {
    SpaceSpec s;
    s.kind_ = Kind::Convexify2;
    s.base_ = std::make_shared<SpaceSpec>(std::move(base));
    return s;
}

SpaceSpec SpaceSpec::dual(SpaceSpec base) {
    SpaceSpec s;
    s.kind_ = Kind::Dual;
    s.base_ = std::make_shared<SpaceSpec>(std::move(base));
    return s;
}

SpaceSpec SpaceSpec::l2_sum_blocks(std::vector<Block> blocks) {
    if (blocks.empty()) throw std::invalid_argument("l2_sum_blocks: empty block list");
    for (const Block& b : blocks) {
        if (!(b.p >= 1.0)) throw std::invalid_argument("l2_sum_blocks: block p must be >= 1");
        if (b.size < 1) throw std::invalid_argument("l2_sum_blocks: block size must be positive");
    }
    SpaceSpec s;
    s.kind_ = Kind::L2SumBlocks;
    s.blocks_ = std::move(blocks);
    return s;
}

SpaceSpec SpaceSpec::sym_tsirelson2() {
    SpaceSpec s;
    s.kind_ = Kind::SymTsirelson2;
    return s;
}

SpaceSpec SpaceSpec::ell2() {
    SpaceSpec s;
    s.kind_ = Kind::Ell2;
    return s;
}

SpaceSpec SpaceSpec::from_name(const std::string& name) {
    if (name == "l1") return lp(1.0);
    if (name == "l2" || name == "ell2") return ell2();
    if (name == "linf") return lp(kInfExponent);
    if (name == "schreier" || name == "s") return schreier();
    if (name == "s2") return convexify2(schreier());
    if (name == "tsirelson" || name == "t") return tsirelson();
    if (name == "t2") return convexify2(tsirelson());
    if (name == "ts2") return sym_tsirelson2();
    if (name.rfind("lp:", 0) == 0) {
        std::string rest = name.substr(3);
        auto colon = rest.find(':');
        double p = rest == "inf" ? kInfExponent : std::stod(rest.substr(0, colon));
        if (colon == std::string::npos) return lp(p);
        return lp(p, std::stoll(rest.substr(colon + 1)));
    }
    if (name.rfind("dual:", 0) == 0) {
        return dual(from_name(name.substr(5)));
    }
    if (name.rfind("blocks:", 0) == 0) {
        std::vector<Block> blocks;
        std::stringstream ss(name.substr(7));
        std::string part;
        while (std::getline(ss, part, ';')) {
            auto comma = part.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("space name: block needs p,k: " + part);
            blocks.push_back({part.substr(0, comma) == "inf" ? kInfExponent
                                                            : std::stod(part.substr(0, comma)),
                              std::stoll(part.substr(comma + 1))});
        }
        return l2_sum_blocks(std::move(blocks));
    }
    throw std::invalid_argument("unknown space name: " + name);
}

std::string SpaceSpec::name() const {
    std::ostringstream out;
    switch (kind_) {
        case Kind::Lp:
            if (p_ == 1.0 && !dim_) return "l1";
            if (p_ == kInfExponent && !dim_) return "linf";
            out << "lp:" << (p_ == kInfExponent ? "inf" : std::to_string(p_));
            if (dim_) out << ":" << *dim_;
            return out.str();
        case Kind::Schreier: return "schreier";
        case Kind::Tsirelson: return "tsirelson";
        case Kind::Convexify2:
            if (base_->kind() == Kind::Schreier) return "s2";
            if (base_->kind() == Kind::Tsirelson) return "t2";
            return "convexify2(" + base_->name() + ")";
        case Kind::Dual: return "dual:" + base_->name();
        case Kind::L2SumBlocks: {
            out << "blocks:";
            for (std::size_t i = 0; i < blocks_.size(); ++i) {
                if (i) out << ";";
                out << (blocks_[i].p == kInfExponent ? "inf" : std::to_string(blocks_[i].p))
                    << "," << blocks_[i].size;
            }
            return out.str();
        }
        case Kind::SymTsirelson2: return "ts2";
        case Kind::Ell2: return "l2";
    }
    return "?";
}

double conjugate_exponent(double p) {
    if (p == 1.0) return kInfExponent;
    if (p == kInfExponent) return 1.0;
    return p / (p - 1.0);
}

}  // namespace twistlab
