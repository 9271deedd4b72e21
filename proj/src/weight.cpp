#include "spindec/weight.hpp"

#include "spindec/error.hpp"

namespace spindec {

Weight Weight::from_doubled(std::vector<std::int64_t> doubled) {
    std::vector<HalfInt> c;
    c.reserve(doubled.size());
    for (std::int64_t d : doubled) c.push_back(HalfInt::from_doubled(d));
    return Weight(std::move(c));
}

Parity Weight::parity() const {
    if (coords_.empty()) return Parity::integral;
    const bool first_int = coords_[0].is_integer();
    for (const HalfInt& c : coords_)
        if (c.is_integer() != first_int) return Parity::mixed;
    return first_int ? Parity::integral : Parity::half_integral;
}

bool Weight::all_integral() const {
    for (const HalfInt& c : coords_)
        if (!c.is_integer()) return false;
    return true;
}

Weight Weight::operator+(const Weight& o) const {
    if (rank() != o.rank()) throw DomainError("weight rank mismatch in addition");
    std::vector<HalfInt> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return Weight(std::move(c));
}

Weight Weight::operator-(const Weight& o) const {
    if (rank() != o.rank()) throw DomainError("weight rank mismatch in subtraction");
    std::vector<HalfInt> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
    return Weight(std::move(c));
}

Weight Weight::operator-() const {
    std::vector<HalfInt> c;
    c.reserve(coords_.size());
    for (const HalfInt& x : coords_) c.push_back(-x);
    return Weight(std::move(c));
}

std::string Weight::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ",";
        s += coords_[i].to_string();
    }
    s += ")";
    return s;
}

Parity sum_parity(Parity a, Parity b) {
    if (a == Parity::mixed || b == Parity::mixed) return Parity::mixed;
    return a == b ? Parity::integral : Parity::half_integral;
}

std::int64_t ip4(const Weight& x, const Weight& y) {
    if (x.rank() != y.rank()) throw DomainError("weight rank mismatch in inner product");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.rank(); ++i) s += x[i].doubled() * y[i].doubled();
    return s;
}

} // namespace spindec
