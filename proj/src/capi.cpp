#include "veronese.h"

#include <cstring>
#include <string>

#include "veronese/io.hpp"

using namespace vrn;

struct vrn_ctx {
  FieldTower tower;
  PlaneClassifier classifier;
  std::string last_error;

  vrn_ctx(unsigned h, std::uint32_t modulus) : tower(h, modulus), classifier(tower) {}
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

vrn_status to_status(const error& e) {
  if (dynamic_cast<const parse_error*>(&e)) return VRN_ERR_PARSE;
  if (dynamic_cast<const out_of_scope_error*>(&e)) return VRN_ERR_OUT_OF_SCOPE;
  if (dynamic_cast<const unsupported_error*>(&e)) return VRN_ERR_UNSUPPORTED;
  if (dynamic_cast<const invalid_label_error*>(&e)) return VRN_ERR_INVALID_ARGUMENT;
  if (dynamic_cast<const domain_error*>(&e)) return VRN_ERR_INVALID_ARGUMENT;
  if (dynamic_cast<const dependence_error*>(&e)) return VRN_ERR_INVALID_ARGUMENT;
  if (dynamic_cast<const check_failure*>(&e)) return VRN_ERR_CHECK_FAILED;
  return VRN_ERR_INTERNAL;
}

template <typename Fn>
vrn_status guarded(vrn_ctx* ctx, char** json_out, Fn&& fn) {
  if (!ctx) return VRN_ERR_INVALID_ARGUMENT;
  if (!json_out) {
    ctx->last_error = "json_out is null";
    return VRN_ERR_INVALID_ARGUMENT;
  }
  *json_out = nullptr;
  try {
    nlohmann::json j = fn();
    *json_out = dup_string(j.dump(2));
    if (!*json_out) {
      ctx->last_error = "out of memory";
      return VRN_ERR_INTERNAL;
    }
    ctx->last_error.clear();
    return VRN_OK;
  } catch (const error& e) {
    ctx->last_error = e.what();
    return to_status(e);
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return VRN_ERR_INTERNAL;
  }
}

std::vector<CheckResult> run_named_check(vrn_ctx* ctx, const std::string& check, bool slow) {
  const PlaneClassifier& C = ctx->classifier;
  const Gf2e& F = C.field();
  const std::uint32_t q = F.q();
  const bool all = check == "all";
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> v) {
    out.insert(out.end(), v.begin(), v.end());
  };
  const bool want_census = all || check == "census" || check == "nonexistence" ||
                           check == "orbit-stabilizer";
  bool known = want_census;

  if (all || check == "table1") {
    known = true;
    append(check_table1(C));
  }
  if (want_census) {
    CensusOptions opt;
    opt.full = q < 8 || slow;
    CensusResult r = census(C, opt);
    if (all || check == "census") append(check_census_labels(C, r));
    if (all || check == "census" || check == "nonexistence") append(check_nonexistence(r));
    if ((all || check == "orbit-stabilizer") && !r.sampled) {
      std::vector<PlaneOrbit> labels = q <= 4 ? valid_plane_orbits(q)
                                              : std::vector<PlaneOrbit>{PlaneOrbit::S12,
                                                                        PlaneOrbit::S13,
                                                                        PlaneOrbit::S14};
      append(check_orbit_stabilizer(C, r, labels));
    }
  }
  if (all || check == "sym7") {
    known = true;
    if (q == 2)
      append(check_sym7_fusion(C));
    else if (!all)
      out.push_back({"sym7-fusion", false, "only defined at q = 2"});
  }
  if (all || check == "sigma6-hyperplanes") {
    known = true;
    append(check_sigma6_hyperplanes(C));
  }
  if (all || check == "inflexion-sweep") {
    known = true;
    if (q >= 8)
      append(check_inflexion_sweep(F.h()));
    else
      for (unsigned h : {3u, 4u, 5u}) append(check_inflexion_sweep(h));
  }
  if (all || check == "solvers") {
    known = true;
    append(check_solvers(F.h()));
  }
  if (all || check == "equivariance") {
    known = true;
    if (q > 2) append(check_equivariance(C, slow ? 1000 : 200, 20240901));
  }
  if (all || check == "line-orbits") {
    known = true;
    append(check_line_orbits_q4(q == 4 ? F.modulus() : 0));
  }
  if (check == "sigma14-bijection" || (all && slow && q > 4)) {
    known = true;
    if (q > 4)
      append(check_bijections(C, true));
    else
      out.push_back({"bijection/o14", false, "needs q > 4"});
  } else if (check == "sigma12-bijection" || check == "sigma13-bijection" ||
             (all && (q <= 4 || slow))) {
    known = known || check == "sigma12-bijection" || check == "sigma13-bijection";
    if (q > 2) append(check_bijections(C, false));
  }
  if (all || check == "extension-inflexions") {
    known = true;
    if (q > 2) append(check_extension_inflexions(C));
  }
  if (all || check == "determinism") {
    known = true;
    if (q <= 4 || slow) append(check_census_determinism(C));
  }
  if (!known) throw parse_error("unknown check name: " + check);
  return out;
}

}  // namespace

extern "C" {

vrn_status vrn_ctx_create(unsigned q, const char* modulus_bits, vrn_ctx** out) {
  if (!out) return VRN_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  unsigned h = 0;
  while ((1u << h) < q && h <= 17) ++h;
  if (h == 0 || h > 16 || (1u << h) != q) return VRN_ERR_INVALID_ARGUMENT;
  try {
    std::uint32_t modulus = 0;
    if (modulus_bits && *modulus_bits) {
      unsigned hm = 0;
      modulus = parse_modulus_bits(modulus_bits, &hm);
      if (hm != h) return VRN_ERR_INVALID_ARGUMENT;
    } else {
      modulus = Gf2e::default_modulus(h);
    }
    *out = new vrn_ctx(h, modulus);
    return VRN_OK;
  } catch (const error&) {
    return VRN_ERR_INVALID_ARGUMENT;
  } catch (const std::exception&) {
    return VRN_ERR_INTERNAL;
  }
}

void vrn_ctx_destroy(vrn_ctx* ctx) { delete ctx; }

unsigned vrn_ctx_q(const vrn_ctx* ctx) { return ctx ? ctx->tower.base().q() : 0; }

const char* vrn_last_error(const vrn_ctx* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

void vrn_string_free(char* s) { std::free(s); }

vrn_status vrn_classify_plane(vrn_ctx* ctx, const char* text, int input_kind,
                              char** json_out) {
  return guarded(ctx, json_out, [&]() {
    if (!text) throw parse_error("null input");
    const Gf2e& F = ctx->tower.base();
    Plane5 pl;
    switch (input_kind) {
      case 0: pl = parse_plane_matrix(F, text); break;
      case 1: pl = parse_plane_points(F, text); break;
      case 2: pl = parse_pencil(F, text); break;
      default: throw parse_error("input_kind must be 0, 1 or 2");
    }
    return classification_json(ctx->classifier, pl);
  });
}

vrn_status vrn_representative(vrn_ctx* ctx, const char* label, char** json_out) {
  return guarded(ctx, json_out, [&]() {
    if (!label) throw parse_error("null label");
    auto s = plane_orbit_from_name(label);
    if (!s) throw invalid_label_error("unknown label: " + std::string(label));
    Plane5 rep = ctx->classifier.representative(*s);
    nlohmann::json j = classification_json(ctx->classifier, rep);
    j["requested"] = plane_orbit_name(*s);
    return j;
  });
}

vrn_status vrn_census(vrn_ctx* ctx, const char* group, int full, unsigned shards,
                      unsigned long long random_samples, char** json_out) {
  return guarded(ctx, json_out, [&]() {
    CensusOptions opt;
    std::string g = group ? group : "pgl3";
    if (g == "sym7")
      opt.group = CensusGroup::Sym7;
    else if (g == "pgl3")
      opt.group = CensusGroup::Pgl3;
    else
      throw parse_error("group must be pgl3 or sym7");
    opt.full = full != 0 || ctx->tower.base().q() < 8;
    opt.shards = shards ? shards : 1;
    if (random_samples) opt.random_samples = random_samples;
    CensusResult r = census(ctx->classifier, opt);
    return census_json(r);
  });
}

vrn_status vrn_verify(vrn_ctx* ctx, const char* check, int slow, char** json_out) {
  return guarded(ctx, json_out, [&]() {
    if (!check) throw parse_error("null check name");
    auto checks = run_named_check(ctx, check, slow != 0);
    return checks_json(checks);
  });
}

}  // extern "C"
