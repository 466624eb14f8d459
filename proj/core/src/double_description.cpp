#include "double_description.hpp"

#include <cstdint>

#include "toricmld/lattice.hpp"

namespace toricmld::detail {

namespace {

class Bits {
 public:
  bool test(std::size_t i) const {
    const std::size_t w = i / 64;
    return w < words_.size() && ((words_[w] >> (i % 64)) & 1U);
  }
  void set(std::size_t i) {
    const std::size_t w = i / 64;
    if (words_.size() <= w) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (i % 64);
  }
  Bits operator&(const Bits& o) const {
    Bits out;
    out.words_.resize(std::min(words_.size(), o.words_.size()));
    for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] = words_[i] & o.words_[i];
    return out;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t other = i < o.words_.size() ? o.words_[i] : 0;
      if ((words_[i] & ~other) != 0) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntVector v;
  Bits tight;  // processed inequalities vanishing on v
};

IntVector combine(const Integer& alpha, const IntVector& x, const Integer& beta,
                  const IntVector& y) {
  IntVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = alpha * x[i] - beta * y[i];
  return out;
}

class Engine {
 public:
  explicit Engine(std::size_t dim) {
    for (std::size_t i = 0; i < dim; ++i) {
      IntVector e(dim, Integer(0));
      e[i] = 1;
      lines_.push_back(std::move(e));
    }
  }

  void add(const IntVector& a, bool equality) {
    const std::size_t index = processed_;
    if (!equality) ++processed_;

    std::size_t pivot = lines_.size();
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      if (dot(a, lines_[i]) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < lines_.size()) {
      IntVector l = lines_[pivot];
      Integer al = dot(a, l);
      if (al < 0) {
        l = negated(l);
        al = -al;
      }
      std::vector<IntVector> lines;
      for (std::size_t i = 0; i < lines_.size(); ++i) {
        if (i == pivot) continue;
        const Integer ai = dot(a, lines_[i]);
        lines.push_back(ai == 0 ? lines_[i] : primitive(combine(al, lines_[i], ai, l)));
      }
      lines_ = std::move(lines);
      for (auto& r : rays_) {
        const Integer ar = dot(a, r.v);
        if (ar != 0) r.v = primitive(combine(al, r.v, ar, l));
        if (!equality) r.tight.set(index);
      }
      if (!equality) {
        Ray nr{primitive(l), Bits()};
        for (std::size_t i = 0; i < index; ++i) nr.tight.set(i);
        rays_.push_back(std::move(nr));
      }
      return;
    }

    std::vector<std::size_t> pos, neg;
    std::vector<Integer> values(rays_.size());
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      values[i] = dot(a, rays_[i].v);
      if (values[i] > 0) {
        pos.push_back(i);
        if (!equality) next.push_back(rays_[i]);
      } else if (values[i] < 0) {
        neg.push_back(i);
      } else {
        Ray r = rays_[i];
        if (!equality) r.tight.set(index);
        next.push_back(std::move(r));
      }
    }
    for (std::size_t p : pos) {
      for (std::size_t n : neg) {
        const Bits common = rays_[p].tight & rays_[n].tight;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays_.size() && adjacent; ++k) {
          if (k == p || k == n) continue;
          if (common.subset_of(rays_[k].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        // values[p] > 0 > values[n]
        Ray r{primitive(combine(values[p], rays_[n].v, values[n], rays_[p].v)), common};
        if (!equality) r.tight.set(index);
        next.push_back(std::move(r));
      }
    }
    rays_ = std::move(next);
  }

  ConeGenerators result() const {
    ConeGenerators out;
    for (const auto& r : rays_) out.rays.push_back(r.v);
    std::sort(out.rays.begin(), out.rays.end(), lex_less<IntVector>);
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    if (!lines_.empty()) {
      const std::size_t dim = lines_.front().size();
      out.lines = Sublattice::span(dim, lines_).saturation().basis().row_list();
    }
    return out;
  }

 private:
  std::vector<IntVector> lines_;
  std::vector<Ray> rays_;
  std::size_t processed_ = 0;
};

}  // namespace

ConeGenerators cone_generators(std::size_t dim, const std::vector<IntVector>& inequalities,
                               const std::vector<IntVector>& equalities) {
  Engine engine(dim);
  for (const auto& e : equalities) {
    require_same_size(e.size(), dim, "cone_generators equality");
    if (!is_zero(e)) engine.add(e, true);
  }
  for (const auto& a : inequalities) {
    require_same_size(a.size(), dim, "cone_generators inequality");
    if (!is_zero(a)) engine.add(a, false);
  }
  return engine.result();
}

}  // namespace toricmld::detail
