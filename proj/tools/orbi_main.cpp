// orbi: command-line front end for the orbifold invariant library.
//
// Exit codes: 0 success, 2 parse/input error, 3 domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orbi/action_json.hpp"
#include "orbi/covers.hpp"
#include "orbi/enumerate.hpp"
#include "orbi/error.hpp"
#include "orbi/groups.hpp"
#include "orbi/hitchin.hpp"
#include "orbi/riemann_roch.hpp"
#include "orbi/signature.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace orbi;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;

enum class Format { json, csv };

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char ch : value) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

// One output record. JSON prints the fields as an object; CSV prints the
// header once, then one row per record.
class Emitter {
 public:
  explicit Emitter(Format format) : format_(format) {}

  void record(const json& fields) {
    if (format_ == Format::json) {
      std::cout << fields.dump() << '\n';
      return;
    }
    if (!header_done_) {
      std::string header;
      for (auto it = fields.begin(); it != fields.end(); ++it) {
        if (it != fields.begin()) header += ',';
        header += csv_field(it.key());
      }
      std::cout << header << '\n';
      header_done_ = true;
    }
    std::string row;
    for (auto it = fields.begin(); it != fields.end(); ++it) {
      if (it != fields.begin()) row += ',';
      row += csv_field(it->is_string() ? it->get<std::string>() : it->dump());
    }
    std::cout << row << '\n';
  }

 private:
  Format format_;
  bool header_done_ = false;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InvalidInput(std::string("malformed ") + what + " list '" + text + "'");
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs `body` and converts library exceptions into exit codes with a
// message on stderr.
template <typename Body>
int guarded(Body&& body, const std::string& context = {}) {
  try {
    body();
    return kExitOk;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << context << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    std::cerr << "error: " << context << e.what() << '\n';
    return kExitDomain;
  }
}

struct Common {
  bool json_flag = false;
  bool csv_flag = false;
  std::string batch_file;
  std::string signature;

  Format format() const { return csv_flag ? Format::csv : Format::json; }
};

// Applies `per_signature` to the positional signature, or to each non-blank
// line of the batch file. Batch mode tags records with the signature and
// keeps going after a failing line; the exit code is the worst seen.
template <typename PerSignature>
int for_signatures(const Common& common, PerSignature&& per_signature) {
  Emitter out(common.format());
  if (common.batch_file.empty()) {
    if (common.signature.empty()) {
      std::cerr << "error: missing signature (or --batch FILE)\n";
      return kExitParse;
    }
    return guarded([&] {
      const auto sig = parse_signature(common.signature);
      if (common.format() == Format::json) {
        out.record(per_signature(sig));
        return;
      }
      json record;
      record["signature"] = to_string(sig);
      const json fields = per_signature(sig);
      for (const auto& [key, value] : fields.items()) record[key] = value;
      out.record(record);
    });
  }
  std::ifstream in(common.batch_file);
  if (!in) {
    std::cerr << "error: cannot open '" << common.batch_file << "'\n";
    return kExitParse;
  }
  int worst = kExitOk;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const int code = guarded([&] {
      const auto sig = parse_signature(line);
      json record;
      record["signature"] = to_string(sig);
      const json fields = per_signature(sig);
      for (const auto& [key, value] : fields.items()) record[key] = value;
      out.record(record);
    }, "line " + std::to_string(line_number) + ": ");
    worst = std::max(worst, code);
  }
  return worst;
}

void add_common(CLI::App* cmd, Common& common, bool batch) {
  cmd->add_flag("--json", common.json_flag, "JSON output (default)");
  cmd->add_flag("--csv", common.csv_flag, "CSV output with a header row");
  if (batch) {
    cmd->add_option("--batch", common.batch_file, "File with one signature per line");
  }
  cmd->add_option("signature", common.signature,
                  "Signature <o|n><genus>[b<B>][c:<orders>][d:<orders>]");
}

json bundle_json(const OrbiLineBundle& b) {
  return {{"coarse_degree", b.coarse_degree}, {"isotropies", b.isotropies}};
}

json bundle_json(const RealOrbiLineBundle& b) {
  return {{"coarse_degree", b.coarse_degree},
          {"cone_isotropies", b.cone_isotropies},
          {"dihedral_isotropies", b.dihedral_isotropies}};
}

// "<deg>:<a1,a2,...>" for complex curves, "<deg>:<cone isotropies>|<dihedral
// isotropies>" for real ones.
std::pair<std::int64_t, std::string> split_bundle(const std::string& text) {
  const auto colon = text.find(':');
  const std::string deg_text = text.substr(0, colon);
  std::int64_t degree = 0;
  try {
    std::size_t used = 0;
    degree = std::stoll(deg_text, &used);
    if (used != deg_text.size()) throw std::invalid_argument(deg_text);
  } catch (const std::logic_error&) {
    throw InvalidInput("malformed bundle '" + text + "' (expected <degree>:<isotropies>)");
  }
  return {degree, colon == std::string::npos ? std::string{} : text.substr(colon + 1)};
}

json presentation_json(const Presentation& p) {
  json relators = json::array();
  json words = json::array();
  for (const auto& rel : p.relators) {
    relators.push_back(format_word(p, rel));
    json letters = json::array();
    for (const auto& l : rel) letters.push_back(l.inverse ? -(l.generator + 1) : l.generator + 1);
    words.push_back(letters);
  }
  return {{"generators", p.generators},
          {"involutive", p.involutive},
          {"relators", relators},
          {"words", words}};
}

json rigid_record(const OrbifoldSignature& s, int n) {
  return {{"signature", to_string(s)},
          {"chi", orbifold_euler_characteristic(s).to_string()},
          {"dim", hitchin_dimension_pgl(s, n)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbi: invariants of closed hyperbolic 2-orbifolds"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Common common;
  int exit_code = kExitOk;

  auto* chi = app.add_subcommand("chi", "Orbifold Euler characteristic");
  add_common(chi, common, true);
  chi->callback([&] {
    exit_code = for_signatures(common, [](const OrbifoldSignature& s) {
      return json{{"chi", orbifold_euler_characteristic(s).to_string()}};
    });
  });

  auto* teich = app.add_subcommand("teich", "Teichmuller space dimension");
  add_common(teich, common, true);
  teich->callback([&] {
    exit_code = for_signatures(common, [](const OrbifoldSignature& s) {
      return json{{"dim", teichmuller_dimension(s)}};
    });
  });

  int rank = 0;
  std::string exponents;
  std::string lie_type;
  auto* hitchin = app.add_subcommand("hitchin", "Hitchin component dimension");
  add_common(hitchin, common, true);
  auto* rank_opt = hitchin->add_option("--n", rank, "Rank n of PGL(n, R)");
  auto* exp_opt = hitchin->add_option("--exponents", exponents,
                                      "Comma-separated exponents of a split group");
  auto* type_opt = hitchin->add_option("--type", lie_type, "Lie type: A<r>, B<r>, C<r>, D<r>, G2");
  rank_opt->excludes(exp_opt)->excludes(type_opt);
  exp_opt->excludes(type_opt);
  hitchin->callback([&] {
    std::optional<ExponentProfile> profile;
    if (!rank_opt->count()) {
      const int code = guarded([&] {
        if (exp_opt->count()) {
          profile = make_profile("custom", parse_int_list(exponents, "exponent"));
        } else if (type_opt->count()) {
          profile = lie_type_profile(lie_type);
        } else {
          throw InvalidInput("hitchin needs --n, --exponents or --type");
        }
      });
      if (code != kExitOk) {
        exit_code = code;
        return;
      }
    }
    exit_code = for_signatures(common, [&](const OrbifoldSignature& s) {
      return json{{"dim", profile ? hitchin_dimension_exponents(s, *profile)
                                  : hitchin_dimension_pgl(s, rank)}};
    });
  });

  std::string bundle_text;
  int power = -1;
  auto* rr = app.add_subcommand("rr", "Orbifold Riemann-Roch for a line bundle");
  add_common(rr, common, false);
  auto* bundle_opt = rr->add_option(
      "--bundle", bundle_text,
      "<deg>:<a1,...> (complex) or <deg>:<cone isotropies>|<dihedral isotropies> (real)");
  auto* power_opt = rr->add_option("--canonical-power", power, "Use K^d");
  bundle_opt->excludes(power_opt);
  rr->callback([&] {
    exit_code = for_signatures(common, [&](const OrbifoldSignature& s) -> json {
      if (!bundle_opt->count() && !power_opt->count()) {
        throw InvalidInput("rr needs --bundle or --canonical-power");
      }
      json out;
      if (s.is_orientable_closed()) {
        const OrbiCurve curve = curve_of(s);
        OrbiLineBundle bundle;
        if (power_opt->count()) {
          bundle = canonical_power(curve, power);
        } else {
          auto [deg, rest] = split_bundle(bundle_text);
          bundle = {deg, parse_int_list(rest, "isotropy")};
        }
        out["chi"] = euler_char_sheaf(curve, bundle);
        out["oracle"] = coarse_rr_oracle(curve, bundle);
        out["degree"] = degree(curve, bundle).to_string();
        out["bundle"] = bundle_json(bundle);
        if (power_opt->count() && power >= 2 &&
            orbifold_euler_characteristic(curve) < Rational(0)) {
          out["h0"] = h0_canonical_power(curve, power);
        }
      } else {
        const RealOrbiCurve curve = real_curve_of(s);
        RealOrbiLineBundle bundle;
        if (power_opt->count()) {
          bundle = canonical_power(curve, power);
        } else {
          auto [deg, rest] = split_bundle(bundle_text);
          const auto bar = rest.find('|');
          bundle = {deg, parse_int_list(rest.substr(0, bar), "isotropy"),
                    bar == std::string::npos ? std::vector<int>{}
                                             : parse_int_list(rest.substr(bar + 1), "isotropy")};
        }
        out["chi"] = euler_char_sheaf_real(curve, bundle);
        out["degree"] = degree(curve, bundle).to_string();
        out["bundle"] = bundle_json(bundle);
        if (power_opt->count() && power >= 2 &&
            orbifold_euler_characteristic(curve) < Rational(0)) {
          out["h0"] = h0_canonical_power(curve, power);
        }
      }
      return out;
    });
  });

  std::string action_file;
  auto* cover = app.add_subcommand("cover", "Lift a signature along a permutation action");
  add_common(cover, common, false);
  cover->add_option("--action", action_file, "JSON action file")->required();
  cover->callback([&] {
    exit_code = for_signatures(common, [&](const OrbifoldSignature& s) {
      const auto checked = validate_action(s, parse_action_json(read_file(action_file)));
      const auto report = check_multiplicativity(checked);
      return json{{"cover", to_string(lift_signature(checked))},
                  {"degree", report.degree},
                  {"chi_base", report.base_chi.to_string()},
                  {"chi_cover", report.cover_chi.to_string()},
                  {"expected_chi_cover", report.expected_cover_chi.to_string()},
                  {"multiplicative", report.holds}};
    });
  });

  auto* double_cover = app.add_subcommand("double-cover", "Orientation double cover");
  add_common(double_cover, common, true);
  double_cover->callback([&] {
    exit_code = for_signatures(common, [](const OrbifoldSignature& s) {
      const auto cover_sig = orientation_double_cover(s);
      return json{{"cover", to_string(cover_sig)},
                  {"chi", orbifold_euler_characteristic(s).to_string()},
                  {"chi_cover", orbifold_euler_characteristic(cover_sig).to_string()}};
    });
  });

  auto* presentation = app.add_subcommand("presentation", "Orbifold fundamental group presentation");
  presentation->add_flag("--json", common.json_flag, "JSON output (default is text)");
  presentation->add_option("signature", common.signature, "Signature")->required();
  presentation->callback([&] {
    exit_code = guarded([&] {
      const auto s = parse_signature(common.signature);
      Presentation p;
      if (s.is_orientable_closed()) {
        p = presentation_fuchsian(s);
      } else if (s.orientable() && s.genus() == 0 && s.mirror_circles() == 1 &&
                 s.cone_count() == 0 && s.corner_count() == 3) {
        p = presentation_coxeter_triangle(s.corner_orders()[0], s.corner_orders()[1],
                                          s.corner_orders()[2]);
      } else {
        throw DomainError("presentations are available for orientable closed "
                          "signatures and triangles, not " + to_string(s));
      }
      if (common.json_flag) {
        std::cout << presentation_json(p).dump() << '\n';
      } else {
        std::cout << format_presentation(p) << '\n';
      }
    });
  });

  std::string bounds_text;
  auto* rigid = app.add_subcommand("rigid", "Enumerate rigid orbifolds (Hitchin dimension 0)");
  rigid->add_option("--n", rank, "Rank n of PGL(n, R)")->required();
  rigid->add_option("--bounds", bounds_text,
                    "genus=A..B,mirrors=A..B,cones=A..B,corners=A..B,order=M,orient=o|n|both");
  rigid->add_flag("--json", common.json_flag, "JSON array output (default)");
  rigid->add_flag("--csv", common.csv_flag, "CSV output: signature,chi,dim");
  rigid->callback([&] {
    exit_code = guarded([&] {
      const auto found = enumerate_rigid(rank, parse_bounds(bounds_text));
      if (common.csv_flag) {
        Emitter out(Format::csv);
        if (found.empty()) std::cout << "signature,chi,dim\n";
        for (const auto& s : found) out.record(rigid_record(s, rank));
      } else {
        json all = json::array();
        for (const auto& s : found) all.push_back(rigid_record(s, rank));
        std::cout << all.dump() << '\n';
      }
    });
  });

  auto* klein = app.add_subcommand("klein-action",
                                   "Print the 168-point action on sphere (2,3,7) as JSON");
  klein->callback([&] { std::cout << action_to_json(klein_quartic_action()) << '\n'; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }
  return exit_code;
}
