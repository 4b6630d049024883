#include "arrhom/chambers.hpp"

#include <algorithm>

#include "arrhom/errors.hpp"
#include "arrhom/feasible.hpp"

namespace arrhom {

namespace {

// Sample a point with the given signs against the first `count` hyperplanes.
std::optional<RVec> sample_prefix(const Arrangement& arr, const SignVector& sv,
                                  int count) {
  LinearSystem sys(arr.dim());
  for (int i = 0; i < count; ++i) {
    sys.add_hyperplane_sign(arr.hyperplane(i), sv[i]);
  }
  return sys.sample();
}

}  // namespace

std::vector<Chamber> enumerate_chambers(const Arrangement& arr) {
  std::vector<Chamber> chambers;
  chambers.push_back({SignVector{}, RVec::Zero(arr.dim())});

  for (int i = 0; i < arr.size(); ++i) {
    std::vector<Chamber> next;
    next.reserve(chambers.size() + 8);
    for (Chamber& c : chambers) {
      const int s = arr.side_of(i, c.sample);
      if (s != 0) {
        // The sample side survives with the same witness; the opposite side
        // is a new chamber only if it is feasible.
        SignVector opposite = c.sv;
        opposite.push_back(static_cast<int8_t>(-s));
        c.sv.push_back(static_cast<int8_t>(s));
        next.push_back(std::move(c));
        if (auto p = sample_prefix(arr, opposite, i + 1)) {
          next.push_back({std::move(opposite), std::move(*p)});
        }
      } else {
        // The witness sits on the new hyperplane, so the chamber meets both
        // open sides; resample each.
        for (int8_t side : {int8_t{1}, int8_t{-1}}) {
          SignVector sv = c.sv;
          sv.push_back(side);
          auto p = sample_prefix(arr, sv, i + 1);
          if (!p) {
            throw invariant_violation(
                "chamber split lost a side that must be nonempty");
          }
          next.push_back({std::move(sv), std::move(*p)});
        }
      }
    }
    chambers = std::move(next);
  }

  std::sort(chambers.begin(), chambers.end(),
            [](const Chamber& a, const Chamber& b) {
              return sv_lex_less(a.sv, b.sv);
            });
  return chambers;
}

std::vector<Face> enumerate_faces(const Arrangement& arr,
                                  const IntersectionLattice& lat) {
  std::vector<Face> faces;
  for (int fi = 0; fi < lat.size(); ++fi) {
    const Flat& flat = lat.flat(fi);
    FlatChart chart = flat_chart(flat, arr.dim());
    const int k = static_cast<int>(chart.directions.cols());

    std::vector<Face> local;
    if (k == 0) {
      Face f;
      f.sample = chart.base;
      f.sv = arr.sign_vector_at(f.sample);
      f.flat = fi;
      f.codim = flat.rank;
      if (sv_zero_mask(f.sv) != flat.contains) {
        throw invariant_violation(
            "face sample does not vanish exactly on its flat");
      }
      local.push_back(std::move(f));
    } else {
      // Proper traces of the other hyperplanes, merged when they cut the
      // flat in the same wall.
      std::vector<Hyperplane> rows;
      for (const Hyperplane& cand : induced_rows(arr, chart)) {
        bool dup = false;
        for (const Hyperplane& kept : rows) {
          RVec a(k + 1), b(k + 1);
          a.head(k) = kept.normal;
          a(k) = kept.offset;
          b.head(k) = cand.normal;
          b(k) = cand.offset;
          bool proportional = true;
          for (int p = 0; p < k + 1 && proportional; ++p) {
            for (int q = p + 1; q < k + 1; ++q) {
              if (a(p) * b(q) != a(q) * b(p)) {
                proportional = false;
                break;
              }
            }
          }
          if (proportional) {
            dup = true;
            break;
          }
        }
        if (!dup) rows.push_back(cand);
      }

      Arrangement section(k, rows);
      for (const Chamber& c : enumerate_chambers(section)) {
        Face f;
        f.sample = chart.base + chart.directions * c.sample;
        f.sv = arr.sign_vector_at(f.sample);
        f.flat = fi;
        f.codim = flat.rank;
        if (sv_zero_mask(f.sv) != flat.contains) {
          throw invariant_violation(
              "face sample does not vanish exactly on its flat");
        }
        local.push_back(std::move(f));
      }
    }
    std::sort(local.begin(), local.end(), [](const Face& a, const Face& b) {
      return sv_lex_less(a.sv, b.sv);
    });
    faces.insert(faces.end(), std::make_move_iterator(local.begin()),
                 std::make_move_iterator(local.end()));
  }
  return faces;
}

bool chamber_bounded(const Arrangement& arr, const SignVector& sv) {
  if (static_cast<int>(sv.size()) != arr.size()) {
    throw input_error("sign vector length does not match arrangement");
  }
  const int d = arr.dim();
  // The recession cone of the closure is cut out by s_i (n_i . u) >= 0, and it
  // always contains the lineality space {u : n_i . u = 0 for all i}.  The
  // chamber is relatively bounded iff the cone is exactly the lineality space,
  // i.e. no recession direction makes any n_i . u strictly nonzero.  (For
  // essential arrangements this is ordinary boundedness.)
  for (int i = 0; i < arr.size(); ++i) {
    for (int sign : {1, -1}) {
      LinearSystem sys(d);
      for (int j = 0; j < arr.size(); ++j) {
        RVec coeffs = arr.hyperplane(j).normal;
        if (sv[j] < 0) coeffs = -coeffs;
        sys.add(coeffs, Rational(0), Rel::ge);
      }
      RVec dir = arr.hyperplane(i).normal;
      if (sign < 0) dir = -dir;
      sys.add(dir, Rational(0), Rel::gt);
      if (sys.feasible()) return false;
    }
  }
  return true;
}

}  // namespace arrhom
