#include "ptmnc/fragment.hpp"

#include <algorithm>
#include <set>

#include "ptmnc/errors.hpp"

namespace ptmnc {

namespace {

template <typename T>
std::vector<std::string> ids_of(const std::vector<std::pair<std::string, T>>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& [id, _] : v) out.push_back(id);
  return out;
}

template <typename T>
std::size_t index_of(const std::vector<std::pair<std::string, T>>& v,
                     const std::string& id, const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].first == id) return i;
  }
  throw InputError(std::string("unknown ") + what + " id '" + id + "'");
}

}  // namespace

std::vector<std::string> GptFragment::state_ids() const {
  return ids_of(states);
}
std::vector<std::string> GptFragment::effect_ids() const {
  return ids_of(effects);
}
std::vector<std::string> GptFragment::transformation_ids() const {
  return ids_of(transformations);
}

std::size_t GptFragment::state_index(const std::string& id) const {
  return index_of(states, id, "state");
}
std::size_t GptFragment::effect_index(const std::string& id) const {
  return index_of(effects, id, "effect");
}
std::size_t GptFragment::transformation_index(const std::string& id) const {
  return index_of(transformations, id, "transformation");
}

const Rational& DataTable::at(const DataKey& key) const {
  auto it = entries.find(key);
  if (it == entries.end()) {
    throw InputError("data table: missing entry (k=" + key.k + ", s=" + key.s +
                     ", t=" + key.t + ")");
  }
  return it->second;
}

ValidationReport validate(const GptFragment& f) {
  ValidationReport rep;
  auto structural = [&rep](std::string code, std::string detail) {
    rep.structural.push_back({std::move(code), std::move(detail)});
  };
  auto violation = [&rep](std::string code, std::string detail) {
    rep.violations.push_back({std::move(code), std::move(detail)});
  };

  if (f.dim == 0) structural("dim", "dim must be >= 1");
  if (f.unit_effect.size() != f.dim)
    structural("unit-effect-dim", "unit effect has wrong dimension");
  for (const auto& [id, v] : f.states) {
    if (v.size() != f.dim) structural("state-dim", "state '" + id + "'");
  }
  for (const auto& [id, v] : f.effects) {
    if (v.size() != f.dim) structural("effect-dim", "effect '" + id + "'");
  }
  for (const auto& [id, m] : f.transformations) {
    if (m.rows() != f.dim || m.cols() != f.dim)
      structural("transformation-dim", "transformation '" + id + "'");
  }
  std::set<std::string> seen;
  for (const auto& id : f.state_ids()) {
    if (!seen.insert("s:" + id).second)
      structural("duplicate-id", "state '" + id + "'");
  }
  for (const auto& id : f.effect_ids()) {
    if (!seen.insert("e:" + id).second)
      structural("duplicate-id", "effect '" + id + "'");
  }
  for (const auto& id : f.transformation_ids()) {
    if (!seen.insert("t:" + id).second)
      structural("duplicate-id", "transformation '" + id + "'");
  }
  for (const auto& m : f.measurements) {
    for (const auto& id : m) {
      if (std::none_of(f.effects.begin(), f.effects.end(),
                       [&](const auto& e) { return e.first == id; })) {
        structural("measurement-unknown-effect", "effect '" + id + "'");
      }
    }
  }
  if (!rep.structural.empty()) return rep;  // invariants need sane shapes

  for (const auto& [id, w] : f.states) {
    Rational u = dot(f.unit_effect, w);
    if (u != 1) {
      violation("normalization",
                "u.w = " + to_string(u) + " for state '" + id + "'");
    }
  }
  for (const auto& [eid, e] : f.effects) {
    for (const auto& [sid, w] : f.states) {
      Rational p = dot(e, w);
      if (p < 0 || p > 1) {
        violation("effect-range", "e.w = " + to_string(p) + " for effect '" +
                                      eid + "' on state '" + sid + "'");
      }
    }
  }
  for (std::size_t mi = 0; mi < f.measurements.size(); ++mi) {
    RationalVector sum(f.dim);
    for (const auto& id : f.measurements[mi]) {
      const RationalVector& e = f.effects[f.effect_index(id)].second;
      for (std::size_t c = 0; c < f.dim; ++c) sum[c] += e[c];
    }
    if (sum != f.unit_effect) {
      violation("measurement-sum",
                "measurement #" + std::to_string(mi) +
                    " does not sum to the unit effect");
    }
  }
  for (const auto& [id, _] : f.effects) {
    bool found = false;
    for (const auto& m : f.measurements) {
      if (std::find(m.begin(), m.end(), id) != m.end()) found = true;
    }
    if (!found) {
      violation("effect-unused",
                "effect '" + id + "' appears in no measurement");
    }
  }
  for (const auto& [tid, m] : f.transformations) {
    for (const auto& [eid, e] : f.effects) {
      RationalVector eT(f.dim);
      for (std::size_t c = 0; c < f.dim; ++c) {
        for (std::size_t r = 0; r < f.dim; ++r) eT[c] += e[r] * m.at(r, c);
      }
      for (const auto& [sid, w] : f.states) {
        Rational p = dot(eT, w);
        if (p < 0 || p > 1) {
          violation("probability-rule",
                    "e.T.w = " + to_string(p) + " for (" + eid + ", " + tid +
                        ", " + sid + ")");
        }
      }
    }
    // Discard-preserving is reported, never rejected.
    RationalVector uT(f.dim);
    for (std::size_t c = 0; c < f.dim; ++c) {
      for (std::size_t r = 0; r < f.dim; ++r)
        uT[c] += f.unit_effect[r] * m.at(r, c);
    }
    if (uT != f.unit_effect) {
      rep.notes.push_back("transformation '" + tid +
                          "' is not discard-preserving");
    }
  }
  return rep;
}

DataTable predict(const GptFragment& f) {
  DataTable table;
  for (const auto& [kid, e] : f.effects) {
    for (const auto& [sid, w] : f.states) {
      for (const auto& [tid, m] : f.transformations) {
        table.entries[{kid, sid, tid}] = dot(e, matvec(m, w));
      }
    }
  }
  return table;
}

GptFragment stabilizer_qubit_fragment() {
  auto vec = [](long a, long b, long c, long d) {
    return RationalVector{Rational(a), Rational(b), Rational(c), Rational(d)};
  };
  GptFragment f;
  f.dim = 4;
  f.states = {
      {"+", vec(1, 1, 0, 0)},  {"-", vec(1, -1, 0, 0)},
      {"+i", vec(1, 0, 1, 0)}, {"-i", vec(1, 0, -1, 0)},
      {"0", vec(1, 0, 0, 1)},  {"1", vec(1, 0, 0, -1)},
  };
  for (const auto& [id, v] : f.states) {
    RationalVector e(4);
    for (std::size_t i = 0; i < 4; ++i) e[i] = v[i] / 2;
    f.effects.emplace_back(id, e);
  }
  f.unit_effect = vec(1, 0, 0, 0);
  auto ptm = [&vec](RationalVector r0, RationalVector r1, RationalVector r2,
                    RationalVector r3) {
    return RationalMatrix::from_rows({r0, r1, r2, r3});
  };
  // Pauli-transfer matrices on coordinates (w, x, y, z).
  f.transformations = {
      {"I", RationalMatrix::identity(4)},
      {"Z", ptm(vec(1, 0, 0, 0), vec(0, -1, 0, 0), vec(0, 0, -1, 0),
                vec(0, 0, 0, 1))},
      {"S", ptm(vec(1, 0, 0, 0), vec(0, 0, -1, 0), vec(0, 1, 0, 0),
                vec(0, 0, 0, 1))},
      {"Sinv", ptm(vec(1, 0, 0, 0), vec(0, 0, 1, 0), vec(0, -1, 0, 0),
                   vec(0, 0, 0, 1))},
  };
  f.measurements = {{"0", "1"}, {"+", "-"}, {"+i", "-i"}};
  return f;
}

DataTable stabilizer_qubit_data() { return predict(stabilizer_qubit_fragment()); }

DataTable uniform_table(const GptFragment& f) {
  std::map<std::string, std::size_t> size_of;
  for (const auto& m : f.measurements) {
    for (const auto& id : m) {
      auto [it, inserted] = size_of.emplace(id, m.size());
      if (!inserted && it->second != m.size()) {
        throw InputError("uniform table undefined: effect '" + id +
                         "' sits in measurements of different sizes");
      }
    }
  }
  DataTable table;
  for (const auto& [kid, _] : f.effects) {
    auto it = size_of.find(kid);
    if (it == size_of.end()) {
      throw InputError("uniform table undefined: effect '" + kid +
                       "' appears in no measurement");
    }
    for (const auto& [sid, _s] : f.states) {
      for (const auto& [tid, _t] : f.transformations) {
        table.entries[{kid, sid, tid}] =
            Rational(1, static_cast<long>(it->second));
      }
    }
  }
  return table;
}

LumpResult lump(
    const std::vector<std::pair<std::string, RationalMatrix>>& first_stage,
    const std::vector<std::pair<std::string, RationalMatrix>>& second_stage,
    const GptFragment& base) {
  for (const auto& [id, m] : first_stage) {
    if (m.rows() != base.dim || m.cols() != base.dim)
      throw InputError("lump: transformation '" + id + "' has wrong dimension");
  }
  for (const auto& [id, m] : second_stage) {
    if (m.rows() != base.dim || m.cols() != base.dim)
      throw InputError("lump: transformation '" + id + "' has wrong dimension");
  }
  LumpResult out;
  out.fragment = base;
  out.fragment.transformations.clear();
  for (const auto& [id1, m1] : first_stage) {
    for (const auto& [id2, m2] : second_stage) {
      std::string id = id1 + "∘" + id2;  // "t1∘t2"
      RationalMatrix prod = matmul(m1, m2);
      bool dup = false;
      for (const auto& [kept_id, kept] : out.fragment.transformations) {
        if (kept == prod) {
          out.merged.emplace_back(id, kept_id);
          dup = true;
          break;
        }
      }
      if (!dup) out.fragment.transformations.emplace_back(id, prod);
    }
  }
  return out;
}

}  // namespace ptmnc
