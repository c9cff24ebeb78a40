// Command-line front end; talks to the shared library through the C API only.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "veronese.h"

namespace {

struct CtxGuard {
  vrn_ctx* ctx = nullptr;
  ~CtxGuard() { vrn_ctx_destroy(ctx); }
};

struct StrGuard {
  char* s = nullptr;
  ~StrGuard() { vrn_string_free(s); }
};

int fail(const vrn_ctx* ctx, vrn_status st) {
  std::cerr << "error: " << (ctx ? vrn_last_error(ctx) : "invalid arguments") << "\n";
  switch (st) {
    case VRN_ERR_PARSE:
    case VRN_ERR_INVALID_ARGUMENT:
    case VRN_ERR_UNSUPPORTED: return 1;
    case VRN_ERR_OUT_OF_SCOPE: return 2;
    case VRN_ERR_CHECK_FAILED: return 3;
    default: return 4;
  }
}

void print_kv_table(const nlohmann::json& j, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_object()) {
      std::cout << indent << it.key() << ":\n";
      print_kv_table(it.value(), indent + "  ");
    } else {
      std::cout << indent << it.key() << ": " << it.value().dump() << "\n";
    }
  }
}

void print_classification(const nlohmann::json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    auto od = j.at("point_od");
    std::cout << "label,r1,r2n,r2s,r3,nucleus_meet_dim,cubic_type\n";
    std::cout << j.at("label").get<std::string>() << "," << od[0] << "," << od[1] << ","
              << od[2] << "," << od[3] << "," << j.at("nucleus_meet_dim") << ","
              << j.at("cubic_type").get<std::string>() << "\n";
    return;
  }
  std::cout << "label            " << j.at("label_display").get<std::string>() << " ("
            << j.at("label").get<std::string>() << ")\n";
  auto od = j.at("point_od");
  std::cout << "point od         [" << od[0] << ", " << od[1] << ", " << od[2] << ", "
            << od[3] << "]\n";
  std::cout << "nucleus meet dim " << j.at("nucleus_meet_dim") << "\n";
  std::cout << "cubic type       " << j.at("cubic_type").get<std::string>() << "\n";
  std::cout << "cubic coeffs     ";
  for (const auto& c : j.at("cubic")) std::cout << c.get<std::string>() << " ";
  std::cout << "\n";
  if (j.contains("inflexion_count"))
    std::cout << "inflexions       " << j.at("inflexion_count") << "\n";
  std::cout << "rank<=2 collinear " << (j.at("rank_le2_collinear").get<bool>() ? "yes" : "no")
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification toolkit for planes meeting the Veronese surface in PG(5,q), q even"};
  app.require_subcommand(1);

  unsigned q = 4;
  std::string modulus;
  std::string field_config;
  std::string format = "table";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--q", q, "field size, a power of two")->capture_default_str();
    cmd->add_option("--modulus", modulus, "irreducible modulus bits, e.g. 10011");
    cmd->add_option("--field-config", field_config,
                    "JSON file mapping h to modulus bits, e.g. {\"3\": \"1011\"}");
    cmd->add_option("--format", format, "output format: table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
  };

  // classify
  auto* c_cmd = app.add_subcommand("classify", "classify one plane");
  std::string matrix_in, points_in, pencil_in;
  add_common(c_cmd);
  c_cmd->add_option("--matrix", matrix_in, "18 hex entries, row-major 3x6 generator matrix");
  c_cmd->add_option("--points", points_in, "three PG(5,q) points, 18 hex entries");
  c_cmd->add_option("--pencil", pencil_in,
                    "symmetric pencil, e.g. \"x,y,.; y,z,.; .,.,.\"");

  // rep
  auto* r_cmd = app.add_subcommand("rep", "print an orbit representative");
  std::string label;
  add_common(r_cmd);
  r_cmd->add_option("--label", label, "orbit label, e.g. Sigma10")->required();

  // census
  auto* n_cmd = app.add_subcommand("census", "classify every plane meeting the surface");
  std::string group = "pgl3";
  unsigned shards = 1;
  bool slow = false;
  unsigned long long samples = 1000000;
  std::string out_path;
  add_common(n_cmd);
  n_cmd->add_option("--group", group, "pgl3 or sym7")
      ->check(CLI::IsMember({"pgl3", "sym7"}));
  n_cmd->add_option("--shards", shards, "enumeration shards (identical output)");
  n_cmd->add_flag("--slow", slow, "full enumeration at q = 8 (default samples)");
  n_cmd->add_option("--samples", samples, "random planes in sampled mode");
  n_cmd->add_option("--out", out_path, "census JSON path (default: census dir)");

  // verify
  auto* v_cmd = app.add_subcommand("verify", "run named verification checks");
  std::string check = "all";
  bool vslow = false;
  add_common(v_cmd);
  v_cmd->add_option("--check", check, "check name or 'all'");
  v_cmd->add_flag("--slow", vslow, "include the exhaustive q = 8 suites");

  CLI11_PARSE(app, argc, argv);

  if (!field_config.empty() && modulus.empty()) {
    std::ifstream f(field_config);
    if (!f) {
      std::cerr << "error: cannot read field config " << field_config << "\n";
      return 1;
    }
    nlohmann::json cfg;
    try {
      f >> cfg;
    } catch (const std::exception& e) {
      std::cerr << "error: field config: " << e.what() << "\n";
      return 1;
    }
    unsigned h = 0;
    while ((1u << h) < q) ++h;
    auto it = cfg.find(std::to_string(h));
    if (it != cfg.end()) modulus = it->get<std::string>();
  }

  CtxGuard g;
  vrn_status st = vrn_ctx_create(q, modulus.empty() ? nullptr : modulus.c_str(), &g.ctx);
  if (st != VRN_OK) {
    std::cerr << "error: bad field parameters (q = " << q << ")\n";
    return 1;
  }

  if (c_cmd->parsed()) {
    int kind = -1;
    std::string text;
    if (!matrix_in.empty()) {
      kind = 0;
      text = matrix_in;
    }
    if (!points_in.empty()) {
      kind = 1;
      text = points_in;
    }
    if (!pencil_in.empty()) {
      kind = 2;
      text = pencil_in;
    }
    if (kind < 0) {
      std::cerr << "error: one of --matrix, --points, --pencil is required\n";
      return 1;
    }
    StrGuard s;
    st = vrn_classify_plane(g.ctx, text.c_str(), kind, &s.s);
    if (st != VRN_OK) return fail(g.ctx, st);
    print_classification(nlohmann::json::parse(s.s), format);
    return 0;
  }

  if (r_cmd->parsed()) {
    StrGuard s;
    st = vrn_representative(g.ctx, label.c_str(), &s.s);
    if (st != VRN_OK) return fail(g.ctx, st);
    print_classification(nlohmann::json::parse(s.s), format);
    return 0;
  }

  if (n_cmd->parsed()) {
    StrGuard s;
    st = vrn_census(g.ctx, group.c_str(), slow ? 1 : 0, shards, samples, &s.s);
    if (st != VRN_OK) return fail(g.ctx, st);
    nlohmann::json j = nlohmann::json::parse(s.s);
    if (out_path.empty()) {
      const char* dir = std::getenv("VERONESE_CENSUS_DIR");
      out_path = std::string(dir ? dir : ".") + "/census_q" + std::to_string(q) + "_" +
                 group + ".json";
    }
    {
      std::ofstream f(out_path);
      if (!f) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 1;
      }
      f << j.dump(2) << "\n";
    }
    if (format == "json") {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "census q=" << j.at("q") << " group=" << j.at("group").get<std::string>()
                << " mode=" << j.at("mode").get<std::string>() << "\n";
      std::printf("%-40s %12s\n", "label", "count");
      for (auto it = j.at("labels").begin(); it != j.at("labels").end(); ++it)
        std::printf("%-40s %12llu\n", it.key().c_str(),
                    static_cast<unsigned long long>(it.value().at("count")));
      std::cout << "total " << j.at("total_planes") << "  -> " << out_path << "\n";
    }
    auto forb = j.at("forbidden_rank_distributions");
    if (forb[0].get<std::uint64_t>() != 0 || forb[1].get<std::uint64_t>() != 0) {
      std::cerr << "error: forbidden rank distributions occurred\n";
      return 3;
    }
    return 0;
  }

  if (v_cmd->parsed()) {
    StrGuard s;
    st = vrn_verify(g.ctx, check.c_str(), vslow ? 1 : 0, &s.s);
    if (st != VRN_OK) return fail(g.ctx, st);
    nlohmann::json j = nlohmann::json::parse(s.s);
    if (format == "json") {
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& c : j.at("checks"))
        std::printf("%-45s %s  %s\n", c.at("name").get<std::string>().c_str(),
                    c.at("pass").get<bool>() ? "PASS" : "FAIL",
                    c.at("detail").get<std::string>().c_str());
    }
    return j.at("all_pass").get<bool>() ? 0 : 3;
  }

  print_kv_table({});
  return 1;
}
