#include "twistlab/real_vector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace twistlab {

RealVector RealVector::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.index < b.index; });
    RealVector v;
    for (const Entry& e : entries) {
        if (e.index < 1) throw std::invalid_argument("RealVector: indices start at 1");
        if (!v.entries_.empty() && v.entries_.back().index == e.index) {
            v.entries_.back().value += e.value;
        } else {
            v.entries_.push_back(e);
        }
    }
    std::erase_if(v.entries_, [](const Entry& e) { return e.value == 0.0; });
    return v;
}

RealVector RealVector::from_dense(const std::vector<double>& values) {
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] != 0.0) entries.push_back({static_cast<long long>(i) + 1, values[i]});
    }
    return from_entries(std::move(entries));
}

RealVector RealVector::basis(long long j, double value) {
    return from_entries({{j, value}});
}

RealVector RealVector::indicator(const std::vector<long long>& indices) {
    std::vector<Entry> entries;
    entries.reserve(indices.size());
    for (long long j : indices) entries.push_back({j, 1.0});
    return from_entries(std::move(entries));
}

std::vector<long long> RealVector::support() const {
    std::vector<long long> s;
    s.reserve(entries_.size());
    for (const Entry& e : entries_) s.push_back(e.index);
    return s;
}

double RealVector::at(long long index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, long long i) { return e.index < i; });
    if (it != entries_.end() && it->index == index) return it->value;
    return 0.0;
}

double RealVector::l1_norm() const {
    double s = 0.0;
    for (const Entry& e : entries_) s += std::fabs(e.value);
    return s;
}

double RealVector::l2_norm() const {
    double s = 0.0;
    for (const Entry& e : entries_) s += e.value * e.value;
    return std::sqrt(s);
}

double RealVector::linf_norm() const {
    double m = 0.0;
    for (const Entry& e : entries_) m = std::max(m, std::fabs(e.value));
    return m;
}

double RealVector::dot(const RealVector& other) const {
    double s = 0.0;
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() && b != other.entries_.end()) {
        if (a->index < b->index) ++a;
        else if (b->index < a->index) ++b;
        else { s += a->value * b->value; ++a; ++b; }
    }
    return s;
}

RealVector RealVector::scaled(double factor) const {
    if (factor == 0.0) return {};
    RealVector v;
    v.entries_.reserve(entries_.size());
    for (const Entry& e : entries_) v.entries_.push_back({e.index, e.value * factor});
    return v;
}

RealVector RealVector::plus(const RealVector& other) const {
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->index < b->index)) {
            merged.push_back(*a++);
        } else if (a == entries_.end() || b->index < a->index) {
            merged.push_back(*b++);
        } else {
            double v = a->value + b->value;
            if (v != 0.0) merged.push_back({a->index, v});
            ++a; ++b;
        }
    }
    RealVector v;
    v.entries_ = std::move(merged);
    return v;
}

RealVector RealVector::minus(const RealVector& other) const {
    return plus(other.scaled(-1.0));
}

RealVector RealVector::abs() const {
    RealVector v;
    v.entries_.reserve(entries_.size());
    for (const Entry& e : entries_) v.entries_.push_back({e.index, std::fabs(e.value)});
    return v;
}

RealVector RealVector::squared() const {
    RealVector v;
    v.entries_.reserve(entries_.size());
    for (const Entry& e : entries_) v.entries_.push_back({e.index, e.value * e.value});
    return v;
}

RealVector RealVector::hadamard(const RealVector& multiplier) const {
    std::vector<Entry> out;
    auto a = entries_.begin();
    auto b = multiplier.entries_.begin();
    while (a != entries_.end() && b != multiplier.entries_.end()) {
        if (a->index < b->index) ++a;
        else if (b->index < a->index) ++b;
        else {
            double v = a->value * b->value;
            if (v != 0.0) out.push_back({a->index, v});
            ++a; ++b;
        }
    }
    RealVector v;
    v.entries_ = std::move(out);
    return v;
}

RealVector RealVector::filtered(const std::function<bool(long long)>& keep) const {
    RealVector v;
    for (const Entry& e : entries_) {
        if (keep(e.index)) v.entries_.push_back(e);
    }
    return v;
}

RealVector RealVector::permuted(const std::function<long long(long long)>& sigma) const {
    std::vector<Entry> out;
    out.reserve(entries_.size());
    for (const Entry& e : entries_) out.push_back({sigma(e.index), e.value});
    return from_entries(std::move(out));
}

bool RealVector::operator==(const RealVector& other) const {
    if (entries_.size() != other.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].index != other.entries_[i].index) return false;
        if (entries_[i].value != other.entries_[i].value) return false;
    }
    return true;
}

std::string RealVector::to_string() const {
    std::string s = "{";
    char buf[64];
    for (const Entry& e : entries_) {
        std::snprintf(buf, sizeof(buf), "%s%lld: %.17g", s.size() > 1 ? ", " : "",
                      e.index, e.value);
        s += buf;
    }
    s += "}";
    return s;
}

}  // namespace twistlab
