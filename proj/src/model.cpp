#include "ptmnc/model.hpp"

#include <algorithm>

#include "ptmnc/errors.hpp"

namespace ptmnc {

bool ModelReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ModelCheck& c) { return c.passed; });
}

OntModel build_model(const RationalVector& x, const VRep& phi, const VRep& psi,
                     const NcProgram& prog) {
  if (x.size() != prog.cols())
    throw InputError("build_model: solution length mismatch");
  const std::size_t nt = prog.t_ids.size();
  OntModel m;

  std::vector<Rational> p_kappa(prog.n_psi);
  for (std::size_t k = 0; k < prog.n_psi; ++k) {
    for (std::size_t kp = 0; kp < prog.n_phi; ++kp)
      p_kappa[k] += x[prog.col_index(kp, k, 0)];
    for (std::size_t t = 1; t < nt; ++t) {
      Rational other;
      for (std::size_t kp = 0; kp < prog.n_phi; ++kp)
        other += x[prog.col_index(kp, k, t)];
      if (other != p_kappa[k])
        throw DomainError("build_model: p(kappa) depends on t");
    }
  }
  for (std::size_t k = 0; k < prog.n_psi; ++k) {
    if (p_kappa[k] > 0) {
      m.ontic_in.push_back(k);
      m.p_kappa[k] = p_kappa[k];
    }
  }
  for (std::size_t kp = 0; kp < prog.n_phi; ++kp) m.ontic_out.push_back(kp);

  for (std::size_t ke = 0; ke < prog.effect_ids.size(); ++ke) {
    for (std::size_t kp = 0; kp < prog.n_phi; ++kp) {
      m.xi[{prog.effect_ids[ke], kp}] = phi.vertices[kp][ke];
    }
  }
  Rational n(static_cast<long>(prog.n_states));
  for (std::size_t s = 0; s < prog.state_ids.size(); ++s) {
    for (std::size_t k : m.ontic_in) {
      m.mu[{prog.state_ids[s], k}] = n * psi.vertices[k][s] * p_kappa[k];
    }
  }
  for (std::size_t t = 0; t < nt; ++t) {
    for (std::size_t kp = 0; kp < prog.n_phi; ++kp) {
      for (std::size_t k : m.ontic_in) {
        m.gamma[{prog.t_ids[t], kp, k}] =
            x[prog.col_index(kp, k, t)] / p_kappa[k];
      }
    }
  }
  return m;
}

ModelReport verify_model(const OntModel& m, const GptFragment& f,
                         const DataTable& data, const IdentitySet& state_ids,
                         const IdentitySet& effect_ids,
                         const IdentitySet& t_ids) {
  ModelReport rep;
  auto check = [&rep](const std::string& name, bool ok, std::string detail) {
    rep.checks.push_back({name, ok, std::move(detail)});
  };

  {
    bool ok = true;
    std::string detail;
    for (const auto& [kid, _e] : f.effects) {
      for (const auto& [sid, _s] : f.states) {
        for (const auto& [tid, _t] : f.transformations) {
          Rational lhs;
          for (std::size_t k : m.ontic_in) {
            const Rational& mu = m.mu.at({sid, k});
            if (mu == 0) continue;
            for (std::size_t kp : m.ontic_out) {
              const Rational& g = m.gamma.at({tid, kp, k});
              if (g == 0) continue;
              lhs += m.xi.at({kid, kp}) * g * mu;
            }
          }
          if (lhs != data.at({kid, sid, tid})) {
            ok = false;
            if (detail.empty())
              detail = "first mismatch at (k=" + kid + ", s=" + sid +
                       ", t=" + tid + ")";
          }
        }
      }
    }
    check("data-reproduction", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (std::size_t a = 0; a < state_ids.generators.size(); ++a) {
      for (std::size_t k : m.ontic_in) {
        Rational sum;
        for (std::size_t i = 0; i < state_ids.process_ids.size(); ++i) {
          sum += state_ids.generators[a][i] *
                 m.mu.at({state_ids.process_ids[i], k});
        }
        if (sum != 0) {
          ok = false;
          if (detail.empty())
            detail = "generator " + std::to_string(a) + " at kappa " +
                     std::to_string(k);
        }
      }
    }
    check("state-identities", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (std::size_t b = 0; b < effect_ids.generators.size(); ++b) {
      for (std::size_t kp : m.ontic_out) {
        Rational sum;
        for (std::size_t i = 0; i < effect_ids.process_ids.size(); ++i) {
          sum += effect_ids.generators[b][i] *
                 m.xi.at({effect_ids.process_ids[i], kp});
        }
        if (sum != 0) {
          ok = false;
          if (detail.empty())
            detail = "generator " + std::to_string(b) + " at kappa' " +
                     std::to_string(kp);
        }
      }
    }
    check("effect-identities", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (std::size_t c = 0; c < t_ids.generators.size(); ++c) {
      for (std::size_t kp : m.ontic_out) {
        for (std::size_t k : m.ontic_in) {
          Rational sum;
          for (std::size_t i = 0; i < t_ids.process_ids.size(); ++i) {
            sum += t_ids.generators[c][i] *
                   m.gamma.at({t_ids.process_ids[i], kp, k});
          }
          if (sum != 0) {
            ok = false;
            if (detail.empty())
              detail = "generator " + std::to_string(c) + " at (kappa'=" +
                       std::to_string(kp) + ", kappa=" + std::to_string(k) +
                       ")";
          }
        }
      }
    }
    check("transformation-identities", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    auto fail = [&](std::string msg) {
      ok = false;
      if (detail.empty()) detail = std::move(msg);
    };
    for (const auto& [sid, _] : f.states) {
      Rational total;
      for (std::size_t k : m.ontic_in) {
        const Rational& v = m.mu.at({sid, k});
        if (v < 0) fail("mu negative for state " + sid);
        total += v;
      }
      if (total != 1) fail("mu of state " + sid + " sums to " + to_string(total));
    }
    for (const auto& [tid, _] : f.transformations) {
      for (std::size_t k : m.ontic_in) {
        Rational total;
        for (std::size_t kp : m.ontic_out) {
          const Rational& v = m.gamma.at({tid, kp, k});
          if (v < 0) fail("Gamma negative for transformation " + tid);
          total += v;
        }
        if (total != 1)
          fail("Gamma(.|kappa=" + std::to_string(k) + ") for " + tid +
               " sums to " + to_string(total));
      }
    }
    for (const auto& [kid, _] : f.effects) {
      for (std::size_t kp : m.ontic_out) {
        const Rational& v = m.xi.at({kid, kp});
        if (v < 0 || v > 1) fail("xi out of [0,1] for effect " + kid);
      }
    }
    for (std::size_t mi = 0; mi < f.measurements.size(); ++mi) {
      for (std::size_t kp : m.ontic_out) {
        Rational total;
        for (const auto& kid : f.measurements[mi]) total += m.xi.at({kid, kp});
        if (total != 1)
          fail("measurement #" + std::to_string(mi) + " response at kappa' " +
               std::to_string(kp) + " sums to " + to_string(total));
      }
    }
    check("distributions", ok, detail);
  }

  rep.notes.push_back("diagram-preservation not verified");
  RationalMatrix id_matrix = RationalMatrix::identity(f.dim);
  for (const auto& [tid, mat] : f.transformations) {
    if (!(mat == id_matrix)) continue;
    bool ontic_identity = true;
    for (std::size_t kp : m.ontic_out) {
      for (std::size_t k : m.ontic_in) {
        const Rational& g = m.gamma.at({tid, kp, k});
        Rational expect = (kp == k) ? Rational(1) : Rational(0);
        if (g != expect) ontic_identity = false;
      }
    }
    if (!ontic_identity) {
      rep.notes.push_back("identity transformation '" + tid +
                          "' is not represented by the ontic identity");
    }
  }
  return rep;
}

}  // namespace ptmnc
