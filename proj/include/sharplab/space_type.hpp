#pragma once

#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sharplab {

/// Ordered list of wire dimensions. The empty list is the monoidal unit
/// (total dimension 1). Equality is list equality: a single wire of
/// dimension 4 is not the same type as two wires of dimension 2.
class SpaceType {
  public:
    SpaceType() = default;
    SpaceType(std::initializer_list<std::size_t> dims) : dims_(dims) { check(); }
    explicit SpaceType(std::vector<std::size_t> dims) : dims_(std::move(dims)) { check(); }

    static SpaceType unit() { return SpaceType{}; }
    static SpaceType wire(std::size_t d) { return SpaceType{d}; }

    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t n_wires() const { return dims_.size(); }
    bool is_unit() const { return dims_.empty(); }

    std::size_t total_dim() const {
        std::size_t t = 1;
        for (auto d : dims_) t *= d;
        return t;
    }

    /// Composite system A1...An ++ B1...Bm.
    SpaceType concat(const SpaceType& other) const {
        std::vector<std::size_t> d = dims_;
        d.insert(d.end(), other.dims_.begin(), other.dims_.end());
        return SpaceType(std::move(d));
    }

    /// Per-wire doubling: each wire d becomes a single wire d*d.
    SpaceType doubled() const {
        std::vector<std::size_t> d;
        d.reserve(dims_.size());
        for (auto x : dims_) d.push_back(x * x);
        return SpaceType(std::move(d));
    }

    friend bool operator==(const SpaceType& a, const SpaceType& b) { return a.dims_ == b.dims_; }
    friend bool operator!=(const SpaceType& a, const SpaceType& b) { return !(a == b); }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < dims_.size(); ++i) os << (i ? "," : "") << dims_[i];
        os << "]";
        return os.str();
    }

  private:
    void check() const {
        for (auto d : dims_)
            if (d < 1) throw std::invalid_argument("wire dimension must be >= 1");
    }
    std::vector<std::size_t> dims_;
};

/// Wiring two different types together is a structural error.
struct TypeMismatch : std::runtime_error {
    SpaceType expected, got;
    TypeMismatch(const SpaceType& e, const SpaceType& g)
        : std::runtime_error("type mismatch: expected " + e.str() + ", got " + g.str()),
          expected(e),
          got(g) {}
};

}  // namespace sharplab
