#include <string>

#include "toricmld/toric_pairs.hpp"

namespace toricmld {

namespace {

[[noreturn]] void fan_error(const std::string& what) { throw Error(ErrorCode::kInvalidFan, what); }

// tau is a face of the cone sigma.
bool is_face(const Polyhedron& sigma, const Polyhedron& tau) {
  if (!sigma.includes(tau)) return false;
  std::vector<Inequality> eqs = sigma.equations();
  for (const auto& h : sigma.inequalities()) {
    bool tight = true;
    for (const auto& r : tau.rays())
      if (dot(h.normal, r) != 0) tight = false;
    for (const auto& l : tau.lines())
      if (dot(h.normal, l) != 0) tight = false;
    if (tight) eqs.push_back(h);
  }
  const Polyhedron face = Polyhedron::from_inequalities(sigma.ambient_dim(), sigma.inequalities(), eqs);
  return face.same_set(tau);
}

}  // namespace

Fan::Fan(std::size_t rank, std::vector<IntVector> rays, std::vector<std::vector<std::size_t>> max_cones)
    : rank_(rank), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (rays_[i].size() != rank_) fan_error("ray " + std::to_string(i) + " has wrong length");
  }
  for (std::size_t c = 0; c < max_cones_.size(); ++c) {
    for (std::size_t idx : max_cones_[c]) {
      if (idx >= rays_.size()) {
        fan_error("max cone " + std::to_string(c) + " refers to missing ray " + std::to_string(idx));
      }
    }
    cones_.push_back(Polyhedron::cone(rank_, cone_rays(c)));
  }
  support_ = Polyhedron::cone(rank_, rays_);
}

std::vector<IntVector> Fan::cone_rays(std::size_t cone) const {
  std::vector<IntVector> out;
  for (std::size_t idx : max_cones_[cone]) out.push_back(rays_[idx]);
  return out;
}

std::optional<std::size_t> Fan::cone_containing(const RatVector& e) const {
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].contains(e)) return i;
  return std::nullopt;
}

void Fan::validate() const {
  if (rank_ == 0) fan_error("lattice rank must be positive");
  if (max_cones_.empty()) fan_error("fan has no maximal cones");
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (is_zero(rays_[i])) fan_error("ray " + std::to_string(i) + " is zero");
    if (!is_primitive(rays_[i])) fan_error("ray " + std::to_string(i) + " is not primitive");
    for (std::size_t j = 0; j < i; ++j) {
      if (rays_[i] == rays_[j]) fan_error("rays " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
    }
  }
  const int n = static_cast<int>(rank_);
  for (std::size_t c = 0; c < max_cones_.size(); ++c) {
    const std::string name = "max cone " + std::to_string(c);
    if (max_cones_[c].empty()) fan_error(name + " is empty");
    const Polyhedron& sigma = cones_[c];
    if (!sigma.lines().empty()) fan_error(name + " is not pointed");
    if (sigma.dimension() != n) fan_error(name + " is not full-dimensional");
    for (std::size_t k = 0; k < rays_.size(); ++k) {
      const bool listed =
          std::find(max_cones_[c].begin(), max_cones_[c].end(), k) != max_cones_[c].end();
      const bool extreme =
          std::find(sigma.rays().begin(), sigma.rays().end(), rays_[k]) != sigma.rays().end();
      if (listed && !extreme) fan_error("ray " + std::to_string(k) + " is not extremal in " + name);
      if (!listed && sigma.contains(rays_[k])) {
        fan_error("ray " + std::to_string(k) + " lies in " + name + " but is not one of its rays");
      }
    }
  }
  for (std::size_t a = 0; a < cones_.size(); ++a) {
    for (std::size_t b = a + 1; b < cones_.size(); ++b) {
      const Polyhedron tau = cones_[a].intersect(cones_[b]);
      if (!is_face(cones_[a], tau) || !is_face(cones_[b], tau)) {
        fan_error("max cones " + std::to_string(a) + " and " + std::to_string(b) +
                  " do not meet in a common face");
      }
    }
  }
  for (std::size_t a = 0; a < cones_.size(); ++a) {
    for (const auto& h : cones_[a].inequalities()) {
      bool boundary = true;
      for (const auto& r : rays_)
        if (dot(h.normal, r) < 0) boundary = false;
      if (boundary) continue;
      std::vector<Inequality> eqs = {h};
      const Polyhedron facet = Polyhedron::from_inequalities(rank_, cones_[a].inequalities(), eqs);
      int shared = 0;
      for (std::size_t b = 0; b < cones_.size(); ++b) {
        if (b == a) continue;
        const Polyhedron tau = cones_[a].intersect(cones_[b]);
        if (tau.dimension() == n - 1 && tau.same_set(facet)) ++shared;
      }
      if (shared != 1) {
        fan_error("support is not convex: a facet of max cone " + std::to_string(a) + " is shared by " +
                  std::to_string(shared) + " other cones");
      }
    }
  }
}

ToricContraction::ToricContraction(Fan fan, LatticeHom pi, std::optional<std::vector<IntVector>> sigma_bar)
    : fan_(std::move(fan)), pi_(std::move(pi)) {
  if (pi_.source_rank() != fan_.rank()) {
    throw Error(ErrorCode::kInvalidContraction, "projection source rank differs from the fan rank");
  }
  std::vector<IntVector> gens;
  if (sigma_bar) {
    gens = *sigma_bar;
    for (const auto& g : gens) {
      if (g.size() != pi_.target_rank()) {
        throw Error(ErrorCode::kInvalidContraction, "sigma_bar generator has wrong length");
      }
    }
  } else {
    for (const auto& r : fan_.rays()) gens.push_back(pi_.apply(r));
  }
  sigma_bar_ = Polyhedron::cone(pi_.target_rank(), gens);
}

void ToricContraction::validate() const {
  fan_.validate();
  if (!pi_.is_surjective()) throw Error(ErrorCode::kInvalidContraction, "projection pi is not surjective");
  if (base_rank() > 0) {
    if (!sigma_bar_.lines().empty()) throw Error(ErrorCode::kInvalidContraction, "sigma_bar is not pointed");
    if (!sigma_bar_.is_full_dimensional()) {
      throw Error(ErrorCode::kInvalidContraction, "sigma_bar is not full-dimensional");
    }
  }
  const Polyhedron preimage = sigma_bar_.preimage(pi_.matrix());
  if (!fan_.support().same_set(preimage)) {
    throw Error(ErrorCode::kInvalidContraction, "support of the fan differs from pi^-1(sigma_bar)");
  }
}

}  // namespace toricmld
