#include "mcgcert/perm.hpp"

#include <sstream>

#include "mcgcert/errors.hpp"

namespace mcgcert {

Perm Perm::from_images(std::vector<int> images) {
  int n = static_cast<int>(images.size());
  std::vector<bool> seen(n, false);
  for (int v : images) {
    if (v < 1 || v > n || seen[v - 1]) throw invalid_argument_error("Perm: not a bijection");
    seen[v - 1] = true;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::compose(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw invalid_argument_error("Perm: degree mismatch");
  Perm out(degree());
  for (int i = 1; i <= degree(); ++i) out.img_[i - 1] = (*this)(rhs(i));
  return out;
}

Perm Perm::inverse() const {
  Perm out(degree());
  for (int i = 1; i <= degree(); ++i) out.img_[(*this)(i)-1] = i;
  return out;
}

bool Perm::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

int Perm::fixed_points() const {
  int n = 0;
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) == i) ++n;
  return n;
}

std::string Perm::cycle_string() const {
  std::ostringstream os;
  std::vector<bool> done(degree(), false);
  bool any = false;
  for (int i = 1; i <= degree(); ++i) {
    if (done[i - 1] || (*this)(i) == i) continue;
    any = true;
    os << "(" << i;
    done[i - 1] = true;
    for (int j = (*this)(i); j != i; j = (*this)(j)) {
      os << "," << j;
      done[j - 1] = true;
    }
    os << ")";
  }
  if (!any) os << "()";
  return os.str();
}

}  // namespace mcgcert
