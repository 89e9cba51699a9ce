#pragma once

// Command-line front end shared by tools/lss.cpp and the CLI tests.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lss/errors.hpp"
#include "lss/krull.hpp"
#include "lss/lssbasis.hpp"
#include "lss/polyengine.hpp"
#include "lss/srcomplex.hpp"
#include "lss/treekit.hpp"

namespace lss::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kVerificationFailed = 2,
  kResourceRefused = 3,
  kUsage = 4,
};

/// `report` runs the Gröbner verifier only up to this many vertices.
inline constexpr int kReportVerifyLimit = 10;

struct Options {
  std::string verb;
  std::string input;  // empty or "-" means the input stream
  bool json = false;
  bool full = false;
  std::optional<int> expand;
  int cap = kDefaultComplexCap;
  std::uint64_t seed = 1;
  std::optional<int> random;
  bool no_relabel = false;
  bool verbose = false;
};

namespace detail {

/// A tree in the labeling used for computation, plus how it got there.
struct Prepared {
  LabeledTree tree;
  bool relabeled = false;
  Permutation permutation;  // input vertex v became permutation[v]
};

inline nlohmann::json permutation_json(const Permutation& p) {
  return nlohmann::json(std::vector<Vertex>(p.begin() + 1, p.end()));
}

inline std::string permutation_text(const Permutation& p) {
  std::string s;
  for (std::size_t v = 1; v < p.size(); ++v) s += (v > 1 ? " " : "") + std::to_string(v) + "->" + std::to_string(p[v]);
  return s;
}

inline std::string join(const std::vector<Vertex>& vs, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? sep : "") + std::to_string(vs[i]);
  return s;
}

template <class T>
std::string join_numbers(const std::vector<T>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

inline std::string polynomial_text(const std::vector<std::int64_t>& coeffs) {
  std::string s;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const std::int64_t c = coeffs[k];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (s.empty()) s += c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    const bool show = k == 0 || mag != 1;
    if (show) s += std::to_string(mag);
    if (k > 0) s += std::string(show ? "*t" : "t") + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return s.empty() ? "0" : s;
}

inline std::string series_text(const HilbertSeries& h) {
  return "(" + polynomial_text(h.numerator) + ") / (1 - t)^" + std::to_string(h.denominator_power);
}

class Runner {
 public:
  Runner(Options opts, std::istream& in, std::ostream& out, std::ostream& err)
      : opts_(std::move(opts)), in_(in), out_(out), err_(err) {}

  int run() {
    const auto start = std::chrono::steady_clock::now();
    log("start verb=" + opts_.verb);
    LabeledTree input = load();
    log("tree with " + std::to_string(input.size()) + " vertices");
    int code = kOk;
    if (opts_.verb == "label") code = label(input);
    else if (opts_.verb == "basis") code = basis(input);
    else if (opts_.verb == "verify") code = verify(input);
    else if (opts_.verb == "initial") code = initial(input);
    else if (opts_.verb == "complex") code = complex(input);
    else if (opts_.verb == "hilbert") code = hilbert(input);
    else if (opts_.verb == "dim") code = dim(input);
    else if (opts_.verb == "report") code = report(input);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    log("done in " + std::to_string(ms.count()) + " ms, exit " + std::to_string(code));
    return code;
  }

 private:
  void log(const std::string& msg) {
    if (!opts_.verbose) return;
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%S", std::gmtime(&now));
    err_ << "[" << stamp << "] " << msg << "\n";
  }

  LabeledTree load() {
    if (opts_.random) {
      if (*opts_.random < 1) throw InvalidArgument("--random needs a positive vertex count");
      std::mt19937_64 rng(opts_.seed);
      return random_tree(*opts_.random, rng);
    }
    std::string text;
    if (opts_.input.empty() || opts_.input == "-") {
      text.assign(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
    } else {
      std::ifstream file(opts_.input);
      if (!file) throw ParseError("cannot open input file '" + opts_.input + "'");
      text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    return parse_tree(text);
  }

  void emit(const nlohmann::json& doc) { out_ << doc.dump(2) << "\n"; }

  /// Ascending version of the input; refuses when --no-relabel is set.
  Prepared ascending(const LabeledTree& t) {
    if (is_ascending(t)) return {t, false, identity_permutation(t.size())};
    if (opts_.no_relabel)
      throw PreconditionError("labeling is not ascending at vertex " + std::to_string(ascending_violation(t)) +
                              " and --no-relabel is set");
    Permutation p = ascending_labeling(t);
    log("relabeled to an ascending labeling");
    return {relabel(t, p), true, p};
  }

  void relabel_note(const Prepared& p) {
    if (p.relabeled) out_ << "relabeled: " << permutation_text(p.permutation) << "\n";
  }

  nlohmann::json labeling_json(const Prepared& p) {
    return {{"relabeled", p.relabeled}, {"permutation", permutation_json(p.permutation)}, {"tree", tree_to_json(p.tree)}};
  }

  int label(const LabeledTree& t) {
    const bool asc = is_ascending(t);
    const Permutation p = asc ? identity_permutation(t.size()) : ascending_labeling(t);
    const LabeledTree out = asc ? t : relabel(t, p);
    if (opts_.json) {
      emit({{"ascending", asc}, {"permutation", permutation_json(p)}, {"tree", tree_to_json(out)}});
    } else {
      out_ << "ascending: " << (asc ? "yes" : "no") << "\n";
      out_ << "permutation: " << permutation_text(p) << "\n";
      out_ << to_edge_list(out);
    }
    return kOk;
  }

  /// Theorem basis on the input labeling with --full, otherwise the
  /// ascending basis on an ascending labeling.
  std::pair<Prepared, std::vector<BasisElement>> chosen_basis(const LabeledTree& t) {
    if (opts_.full) {
      Prepared p{t, false, identity_permutation(t.size())};
      return {p, theorem_basis(t)};
    }
    Prepared p = ascending(t);
    auto b = corollary_basis(p.tree);
    return {std::move(p), std::move(b)};
  }

  int basis(const LabeledTree& t) {
    auto [prep, elements] = chosen_basis(t);
    if (opts_.json) {
      nlohmann::json doc = labeling_json(prep);
      doc["kind"] = opts_.full ? "theorem" : "ascending";
      doc["size"] = elements.size();
      doc["basis"] = to_json(std::span<const BasisElement>(elements));
      emit(doc);
    } else {
      relabel_note(prep);
      out_ << elements.size() << " elements\n";
      for (const auto& e : elements) {
        out_ << to_string(e.polynomial) << "  [" << to_string(e.provenance.kind) << " "
             << join(e.provenance.path.vertices(), "-");
        if (!e.provenance.odd_subset.empty()) out_ << " odd {" << join(e.provenance.odd_subset, ",") << "}";
        out_ << "]\n";
      }
    }
    return kOk;
  }

  int verify(const LabeledTree& t) {
    auto [prep, elements] = chosen_basis(t);
    const VerificationReport r = verify_groebner(elements, edge_generators(prep.tree));
    if (opts_.json) {
      nlohmann::json doc = labeling_json(prep);
      doc["kind"] = opts_.full ? "theorem" : "ascending";
      doc["report"] = to_json(r);
      emit(doc);
    } else {
      relabel_note(prep);
      out_ << "membership: " << (r.membership ? "ok" : "FAILED") << "\n";
      out_ << "generation: " << (r.generation ? "ok" : "FAILED") << "\n";
      out_ << "criterion: " << (r.criterion ? "ok" : "FAILED") << " (" << r.pairs_checked << " pairs)\n";
      for (const auto& f : r.failures)
        out_ << "  " << to_string(f.check) << " " << f.first << " " << f.second << ": " << f.remainder << "\n";
      out_ << (r.pass() ? "PASS" : "FAIL") << "\n";
    }
    return r.pass() ? kOk : kVerificationFailed;
  }

  int initial(const LabeledTree& t) {
    const Prepared p = ascending(t);
    const MonomialIdealGens gens = initial_ideal(p.tree);
    std::vector<std::string> names;
    for (const auto& m : gens.gens) names.push_back(to_string(m, p.tree.size()));
    if (opts_.json) {
      nlohmann::json doc = labeling_json(p);
      doc["generators"] = names;
      emit(doc);
    } else {
      relabel_note(p);
      for (const auto& s : names) out_ << s << "\n";
    }
    return kOk;
  }

  int complex(const LabeledTree& t) {
    const Prepared p = ascending(t);
    const FVector fv = f_vector(p.tree, opts_.cap);
    if (opts_.json) {
      nlohmann::json doc = to_json(fv);
      doc["delta"] = fv.counts;
      doc["faces"] = fv.total();
      emit(doc);
    } else {
      relabel_note(p);
      out_ << "f: " << join_numbers(fv.counts) << "\n";
      for (int i = 0; i <= fv.d; ++i) out_ << "delta_" << i << ": " << fv.delta(i) << "\n";
      out_ << "faces: " << fv.total() << "\n";
      out_ << "dim_complex: " << fv.d << "\n";
    }
    return kOk;
  }

  nlohmann::json hilbert_json(const HilbertSeries& raw) {
    nlohmann::json doc = {{"series", to_json(raw)}, {"reduced", to_json(normalize(raw))}};
    if (opts_.expand) doc["expansion"] = series_expand(raw, *opts_.expand);
    return doc;
  }

  int hilbert(const LabeledTree& t) {
    if (opts_.expand && *opts_.expand < 0) throw InvalidArgument("--expand needs a non-negative degree");
    const Prepared p = ascending(t);
    const HilbertSeries raw = hilbert_series(p.tree, opts_.cap);
    if (opts_.json) {
      emit(hilbert_json(raw));
    } else {
      relabel_note(p);
      out_ << "series: " << series_text(raw) << "\n";
      out_ << "reduced: " << series_text(normalize(raw)) << "\n";
      if (opts_.expand) out_ << "expansion: " << join_numbers(series_expand(raw, *opts_.expand)) << "\n";
    }
    return kOk;
  }

  int dim(const LabeledTree& t) {
    const DimReport r = dim_report(t, opts_.cap);
    if (opts_.json) {
      emit(to_json(r));
    } else {
      out_ << "dim: " << r.dim() << "\n";
      out_ << "complex: " << (r.dim_complex ? std::to_string(*r.dim_complex) : std::string("skipped")) << "\n";
      out_ << "subset_max: " << r.dim_subset_max << (r.subset_exhaustive ? "" : " (dp)") << "\n";
      out_ << "pendant: " << r.dim_pendant << "\n";
      out_ << "bounds: " << r.lower_bound << " " << r.upper_bound << "\n";
      out_ << "witness: " << join(r.witness_V) << "\n";
      out_ << "agree: " << (r.agree ? "yes" : "no") << "\n";
    }
    return kOk;
  }

  int report(const LabeledTree& t) {
    const Prepared p = ascending(t);
    const auto elements = corollary_basis(p.tree);
    std::optional<VerificationReport> check;
    if (p.tree.size() <= kReportVerifyLimit) check = verify_groebner(elements, edge_generators(p.tree));
    std::vector<std::string> initial_names;
    for (const auto& m : initial_ideal(p.tree).gens) initial_names.push_back(to_string(m, p.tree.size()));
    std::optional<FVector> fv;
    if (p.tree.size() <= opts_.cap) fv = f_vector(p.tree, opts_.cap);
    const DimReport d = dim_report(p.tree, opts_.cap);

    if (opts_.json) {
      nlohmann::json doc = labeling_json(p);
      doc["basis_size"] = elements.size();
      doc["basis"] = to_json(std::span<const BasisElement>(elements));
      doc["verify"] = check ? to_json(*check) : nlohmann::json(nullptr);
      doc["initial"] = initial_names;
      doc["complex"] = fv ? to_json(*fv) : nlohmann::json(nullptr);
      doc["hilbert"] = fv ? hilbert_json(hilbert_series(*fv)) : nlohmann::json(nullptr);
      doc["dim"] = to_json(d);
      emit(doc);
    } else {
      relabel_note(p);
      out_ << "tree: " << p.tree.size() << " vertices\n";
      out_ << "basis: " << elements.size() << " elements\n";
      out_ << "verify: " << (check ? (check->pass() ? "PASS" : "FAIL") : "skipped") << "\n";
      out_ << "initial: " << initial_names.size() << " generators\n";
      if (fv) {
        const HilbertSeries raw = hilbert_series(*fv);
        out_ << "f: " << join_numbers(fv->counts) << "\n";
        out_ << "hilbert: " << series_text(normalize(raw)) << "\n";
        if (opts_.expand) out_ << "expansion: " << join_numbers(series_expand(raw, *opts_.expand)) << "\n";
      } else {
        out_ << "complex: skipped (n over cap " << opts_.cap << ")\n";
      }
      out_ << "dim: " << d.dim() << " (agree: " << (d.agree ? "yes" : "no") << ")\n";
    }
    return check && !check->pass() ? kVerificationFailed : kOk;
  }

  Options opts_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace detail

/// Parses `args` (without the program name), runs the verb and returns the
/// exit status. Results go to `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gröbner bases, Stanley-Reisner complexes and Krull dimension for tree ideals", "lss"};
  Options opts;
  app.add_option("verb", opts.verb, "label | basis | verify | initial | complex | hilbert | dim | report")
      ->required()
      ->check(CLI::IsMember({"label", "basis", "verify", "initial", "complex", "hilbert", "dim", "report"}));
  app.add_option("input", opts.input, "tree file (edge list or JSON); stdin when omitted or '-'");
  auto* json_flag = app.add_flag("--json", opts.json, "emit JSON");
  app.add_flag("--text", "emit text (default)")->excludes(json_flag);
  app.add_flag("--full", opts.full, "use the theorem basis on the given labeling");
  app.add_option("--expand", opts.expand, "Hilbert series coefficients up to this degree");
  app.add_option("--cap", opts.cap, "largest n for complex enumeration")->check(CLI::Range(1, 30));
  app.add_option("--seed", opts.seed, "seed for --random");
  app.add_option("--random", opts.random, "use a random tree on this many vertices instead of input");
  app.add_flag("--no-relabel", opts.no_relabel, "reject non-ascending labelings instead of relabeling");
  app.add_flag("--verbose", opts.verbose, "timestamped progress log on stderr");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    return detail::Runner(opts, in, out, err).run();
  } catch (const ResourceError& e) {
    err << "refused: " << e.what() << "\n";
    return kResourceRefused;
  } catch (const ParseError& e) {
    err << "malformed tree: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const BadVertex& e) {
    err << "malformed tree: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const NotATree& e) {
    err << "not a tree: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace lss::cli
