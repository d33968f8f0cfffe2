// Copyright 2026 The braidq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "braidq/bell_states.hpp"
#include "braidq/braid_algebra.hpp"
#include "braidq/braid_word.hpp"
#include "braidq/cli/cli.hpp"
#include "braidq/cli/config.hpp"
#include "braidq/cli/output.hpp"
#include "braidq/entanglement.hpp"
#include "braidq/errors.hpp"
#include "braidq/fixture_io.hpp"

namespace braidq::cli {

namespace {

using Json = nlohmann::ordered_json;

void emit(std::ostream& out, const Json& record) { out << record.dump() << '\n'; }

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const RunConfig& cfg, int n, int trials, std::uint64_t seed, std::ostream& out) {
  const double yb = verify_yang_baxter();
  const ArtinReport report = verify_artin_relations(n, trials, seed);
  const double tol = cfg.tol_construction;
  const bool pass = yb <= tol && report.max_residual() <= tol;

  struct Row {
    std::string check;
    int i;
    int j;
    double residual;
  };
  std::vector<Row> rows{{"yang-baxter", 0, 0, yb}};
  for (const auto& e : report.entries) rows.push_back({to_string(e.relation), e.i, e.j, e.residual});

  switch (cfg.format) {
    case OutputFormat::kTable: {
      Table t({"check", "i", "j", "residual", "status"});
      for (const auto& r : rows) {
        t.add({r.check, r.i ? std::to_string(r.i) : "-", r.j ? std::to_string(r.j) : "-",
               fmt_num(r.residual), r.residual <= tol ? "ok" : "FAIL"});
      }
      t.print(out);
      out << "n=" << n << " trials=" << trials << " seed=" << seed
          << " max_residual=" << fmt_num(std::max(yb, report.max_residual()))
          << " tolerance=" << fmt_num(tol) << " -> " << (pass ? "PASS" : "FAIL") << '\n';
      break;
    }
    case OutputFormat::kJsonLines:
      for (const auto& r : rows) {
        Json j;
        j["check"] = r.check;
        j["i"] = r.i;
        j["j"] = r.j;
        j["residual"] = json_num(r.residual);
        j["tolerance"] = json_num(tol);
        j["pass"] = r.residual <= tol;
        emit(out, j);
      }
      {
        Json j;
        j["check"] = "summary";
        j["n"] = n;
        j["trials"] = trials;
        j["seed"] = seed;
        j["max_residual"] = json_num(std::max(yb, report.max_residual()));
        j["tolerance"] = json_num(tol);
        j["pass"] = pass;
        emit(out, j);
      }
      break;
    case OutputFormat::kCsv:
      out << "check,i,j,residual,tolerance,pass\n";
      for (const auto& r : rows) {
        out << r.check << ',' << r.i << ',' << r.j << ',' << fmt_num(r.residual) << ','
            << fmt_num(tol) << ',' << (r.residual <= tol ? "true" : "false") << '\n';
      }
      break;
  }
  return pass ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------
// bell

void print_amplitudes(const StateVector& psi, double tol, const std::string& index,
                      Table& table) {
  for (std::size_t k = 0; k < psi.dim(); ++k) {
    if (std::abs(psi[k]) <= tol) continue;
    table.add({index, bitstring(k, psi.n_qubits()), fmt_amplitude(psi[k], tol)});
  }
}

int cmd_bell(const RunConfig& cfg, int n, std::optional<std::uint64_t> index, std::ostream& out) {
  if (n < 2) throw ArgumentError("bell needs --n >= 2");
  if (n > cfg.matrix_free_cap) {
    throw SizeError("--n " + std::to_string(n) + " exceeds matrix_free_cap = " +
                    std::to_string(cfg.matrix_free_cap));
  }
  if (!index && n > kDefaultBasisCap) {
    throw SizeError("listing the whole basis for --n " + std::to_string(n) +
                    " exceeds the basis cap = " + std::to_string(kDefaultBasisCap) +
                    "; pass --index");
  }
  const double tol = cfg.tol_construction;
  std::vector<std::uint64_t> indices;
  if (index) {
    indices.push_back(*index);
  } else {
    for (std::uint64_t k = 1; k <= (std::uint64_t{1} << n); ++k) indices.push_back(k);
  }

  bool all_ok = true;
  Table table({"index", "bits", "amplitude"});
  std::vector<std::string> summaries;
  if (cfg.format == OutputFormat::kCsv) out << "index,bits,amplitude\n";

  for (std::uint64_t idx : indices) {
    const StateVector psi = bell_state(n, idx, cfg.matrix_free_cap);
    const auto structure = term_structure(psi, idx, tol);
    const auto& terms = structure.states.front();
    all_ok = all_ok && structure.ok;

    switch (cfg.format) {
      case OutputFormat::kTable: {
        print_amplitudes(psi, tol, std::to_string(idx), table);
        std::string magnitudes;
        for (double m : terms.magnitudes) magnitudes += (magnitudes.empty() ? "" : ",") + fmt_num(m);
        summaries.push_back("# B" + std::to_string(idx) + ": " +
                            std::to_string(terms.nonzero_count) + " terms (expected " +
                            std::to_string(structure.expected_terms) + "), magnitude " +
                            magnitudes + " (expected " + fmt_num(structure.expected_magnitude) +
                            "): " + (structure.ok ? "ok" : "VIOLATION"));
        break;
      }
      case OutputFormat::kJsonLines: {
        Json j;
        j["index"] = idx;
        j["n"] = n;
        Json arr = Json::array();
        for (std::size_t t = 0; t < terms.positions.size(); ++t) {
          Json term;
          term["bits"] = bitstring(terms.positions[t], n);
          term["sign"] = terms.signs[t];
          arr.push_back(term);
        }
        j["terms"] = arr;
        j["magnitude"] = terms.magnitudes.size() == 1 ? json_num(terms.magnitudes.front())
                                                       : Json(nullptr);
        j["term_count"] = terms.nonzero_count;
        j["structure_ok"] = structure.ok;
        emit(out, j);
        break;
      }
      case OutputFormat::kCsv:
        for (std::size_t k = 0; k < psi.dim(); ++k) {
          if (std::abs(psi[k]) <= tol) continue;
          out << idx << ',' << bitstring(k, n) << ',' << fmt_amplitude(psi[k], tol) << '\n';
        }
        break;
    }
  }
  if (cfg.format == OutputFormat::kTable) {
    table.print(out);
    for (const auto& s : summaries) out << s << '\n';
  }
  return all_ok ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------
// analyze

std::string parse_labels(const std::string& text, int n) {
  std::string labels;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) continue;
    const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (up < 'A' || up >= 'A' + n) {
      throw ArgumentError(std::string("qubit label '") + c + "' is not one of A.." +
                          static_cast<char>('A' + n - 1));
    }
    if (labels.find(up) != std::string::npos) {
      throw ArgumentError(std::string("qubit label '") + up + "' listed twice");
    }
    labels += up;
  }
  return labels;
}

int cmd_analyze(const RunConfig& cfg, int n, std::uint64_t index, const std::string& trace_text,
                std::ostream& out) {
  if (n < 2) throw ArgumentError("analyze needs --n >= 2");
  if (n > cfg.matrix_free_cap) {
    throw SizeError("--n " + std::to_string(n) + " exceeds matrix_free_cap = " +
                    std::to_string(cfg.matrix_free_cap));
  }
  const std::string discard = parse_labels(trace_text, n);
  if (static_cast<int>(discard.size()) >= n) throw ArgumentError("cannot trace out every qubit");

  std::string label = "B" + std::to_string(index) + " n=" + std::to_string(n);
  if (!discard.empty()) label += " trace " + discard;

  const Thresholds th{cfg.tol_construction, cfg.tol_eigen, cfg.ppt_threshold};
  const StateVector psi = bell_state(n, index, cfg.matrix_free_cap);
  const EntanglementReport rep = analyze(psi, discard, label, th);

  auto chopped = [&](std::vector<double> xs) {
    for (double& x : xs) x = chop(x, cfg.tol_construction);
    return xs;
  };
  const auto lambdas = chopped(rep.lambda_spectrum.values);
  const auto pt = chopped(rep.pt_eigenvalues);
  const double conc = chop(rep.concurrence, cfg.tol_construction);
  const std::string pt_name = rep.pt_subsystem ? std::string(1, rep.pt_subsystem) : "";

  switch (cfg.format) {
    case OutputFormat::kTable: {
      Table t({"field", "value"});
      t.add({"input", rep.input_label});
      t.add({"retained", rep.retained});
      t.add({"method", rep.method});
      t.add({"lambdas", lambdas.empty() ? "-" : join_nums(lambdas, " ")});
      t.add({"concurrence", fmt_num(conc)});
      t.add({"pt_subsystem", pt_name.empty() ? "-" : pt_name});
      t.add({"pt_eigenvalues", pt.empty() ? "-" : join_nums(pt, " ")});
      t.add({"verdict", to_string(rep.verdict)});
      t.add({"note", rep.note});
      t.add({"thresholds", "construction=" + fmt_num(th.construction) +
                               " eigen=" + fmt_num(th.eigen) + " ppt=" + fmt_num(th.ppt)});
      t.print(out);
      break;
    }
    case OutputFormat::kJsonLines: {
      Json j;
      j["input_label"] = rep.input_label;
      j["retained"] = rep.retained;
      j["method"] = rep.method;
      j["lambdas"] = json_array(lambdas);
      j["concurrence"] = json_num(conc);
      j["pt_subsystem"] = pt_name;
      j["pt_eigenvalues"] = json_array(pt);
      j["verdict"] = to_string(rep.verdict);
      j["note"] = rep.note;
      Json t;
      t["construction"] = json_num(th.construction);
      t["eigen"] = json_num(th.eigen);
      t["ppt"] = json_num(th.ppt);
      j["thresholds"] = t;
      emit(out, j);
      break;
    }
    case OutputFormat::kCsv:
      out << "input_label,retained,method,lambdas,concurrence,pt_subsystem,pt_eigenvalues,verdict\n";
      out << csv_field(rep.input_label) << ',' << rep.retained << ',' << rep.method << ','
          << join_nums(lambdas, ";") << ',' << fmt_num(conc) << ',' << pt_name << ','
          << join_nums(pt, ";") << ',' << to_string(rep.verdict) << '\n';
      break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// word

struct WordOptions {
  std::string action;
  std::string text;
  std::optional<int> n;
  std::optional<int> strands;
  std::optional<std::uint64_t> basis_index;
  std::string state_file;
  std::string output;
};

void print_word(const RunConfig& cfg, const BraidWord& w, std::ostream& out) {
  const std::string text = to_string(w);
  switch (cfg.format) {
    case OutputFormat::kTable:
      out << (w.empty() ? "(empty)" : text) << '\n';
      break;
    case OutputFormat::kJsonLines: {
      Json j;
      j["word"] = text;
      j["strands"] = w.strands;
      j["length"] = w.size();
      Json letters = Json::array();
      for (const auto& g : w.letters) letters.push_back({g.index, static_cast<int>(g.sign)});
      j["letters"] = letters;
      emit(out, j);
      break;
    }
    case OutputFormat::kCsv:
      out << "position,index,sign\n";
      for (std::size_t k = 0; k < w.size(); ++k) {
        out << k + 1 << ',' << w.letters[k].index << ',' << static_cast<int>(w.letters[k].sign)
            << '\n';
      }
      break;
  }
}

int cmd_word(const RunConfig& cfg, const WordOptions& opt, std::ostream& out, std::ostream& err) {
  BraidWord w;
  try {
    w = parse(opt.text, opt.strands);
  } catch (const ParseError& e) {
    err << "parse error: " << e.detail() << '\n'
        << "  " << opt.text << '\n'
        << "  " << std::string(e.position(), ' ') << "^\n";
    return kExitUsage;
  }

  const std::string& action = opt.action;
  if (action == "parse") {
    if (cfg.format == OutputFormat::kTable) {
      out << "word: " << (w.empty() ? "(empty)" : to_string(w)) << '\n'
          << "strands: " << w.strands << '\n'
          << "length: " << w.size() << '\n';
    } else {
      print_word(cfg, w, out);
    }
    return kExitOk;
  }
  if (action == "reduce") {
    print_word(cfg, free_reduce(w), out);
    return kExitOk;
  }
  if (action == "normalize") {
    print_word(cfg, commute_normalize(w), out);
    return kExitOk;
  }
  if (action == "diagram") {
    const std::string art = render_ascii(w);
    std::string rendered = art;
    if (cfg.format == OutputFormat::kJsonLines) {
      Json j;
      j["word"] = to_string(w);
      j["strands"] = w.strands;
      j["diagram"] = art;
      rendered = j.dump() + '\n';
    }
    if (!opt.output.empty()) {
      std::ofstream file(opt.output);
      if (!file) throw ArgumentError("cannot write '" + opt.output + "'");
      file << rendered;
    } else {
      out << rendered;
    }
    return kExitOk;
  }

  const int n = opt.n.value_or(w.strands);
  if (action == "compile") {
    const DenseMatrix m = compile(w, n, cfg.dense_cap);
    const double tol = cfg.tol_construction;
    switch (cfg.format) {
      case OutputFormat::kTable: {
        DenseMatrix shown = m;
        for (auto& z : shown.data()) z = Complex(chop(z.real(), tol), chop(z.imag(), tol));
        write_fixture(out, shown, kSignificantDigits);
        break;
      }
      case OutputFormat::kJsonLines: {
        Json j;
        j["rows"] = m.rows();
        j["cols"] = m.cols();
        Json re = Json::array();
        Json im = Json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
          Json rr = Json::array();
          Json ri = Json::array();
          for (std::size_t c = 0; c < m.cols(); ++c) {
            rr.push_back(json_num(chop(m(r, c).real(), tol)));
            ri.push_back(json_num(chop(m(r, c).imag(), tol)));
          }
          re.push_back(rr);
          im.push_back(ri);
        }
        j["re"] = re;
        j["im"] = im;
        emit(out, j);
        break;
      }
      case OutputFormat::kCsv:
        out << "row,col,re,im\n";
        for (std::size_t r = 0; r < m.rows(); ++r)
          for (std::size_t c = 0; c < m.cols(); ++c)
            out << r << ',' << c << ',' << fmt_num(chop(m(r, c).real(), tol)) << ','
                << fmt_num(chop(m(r, c).imag(), tol)) << '\n';
        break;
    }
    return kExitOk;
  }
  if (action == "apply") {
    if (opt.basis_index && !opt.state_file.empty()) {
      throw ArgumentError("pass either --basis-index or --state-file, not both");
    }
    StateVector psi = [&] {
      if (!opt.state_file.empty()) {
        auto fixture = read_fixture_file(opt.state_file);
        if (!std::holds_alternative<StateVector>(fixture)) {
          throw ArgumentError("'" + opt.state_file + "' holds a matrix, expected a state");
        }
        return std::get<StateVector>(std::move(fixture));
      }
      if (n > cfg.matrix_free_cap) {
        throw SizeError("--n " + std::to_string(n) + " exceeds matrix_free_cap = " +
                        std::to_string(cfg.matrix_free_cap));
      }
      return computational_state(n, opt.basis_index.value_or(1));
    }();
    const StateVector result = apply(w, psi);
    const double tol = cfg.tol_construction;
    switch (cfg.format) {
      case OutputFormat::kTable: {
        Table t({"bits", "amplitude"});
        for (std::size_t k = 0; k < result.dim(); ++k) {
          if (std::abs(result[k]) <= tol) continue;
          t.add({bitstring(k, result.n_qubits()), fmt_amplitude(result[k], tol)});
        }
        t.print(out);
        break;
      }
      case OutputFormat::kJsonLines:
        for (std::size_t k = 0; k < result.dim(); ++k) {
          if (std::abs(result[k]) <= tol) continue;
          Json j;
          j["bits"] = bitstring(k, result.n_qubits());
          j["re"] = json_num(chop(result[k].real(), tol));
          j["im"] = json_num(chop(result[k].imag(), tol));
          emit(out, j);
        }
        break;
      case OutputFormat::kCsv:
        out << "bits,re,im\n";
        for (std::size_t k = 0; k < result.dim(); ++k) {
          if (std::abs(result[k]) <= tol) continue;
          out << bitstring(k, result.n_qubits()) << ',' << fmt_num(chop(result[k].real(), tol))
              << ',' << fmt_num(chop(result[k].imag(), tol)) << '\n';
        }
        break;
    }
    return kExitOk;
  }
  throw ArgumentError("unknown word action '" + action + "'");
}

// ---------------------------------------------------------------------------
// bench

BraidWord random_word(int strands, int length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, strands - 1);
  std::bernoulli_distribution invert(0.5);
  BraidWord w{strands, {}};
  for (int k = 0; k < length; ++k) {
    const int index = pick(rng);
    w.letters.push_back({index, invert(rng) ? Sign::kInverse : Sign::kPositive});
  }
  return w;
}

int cmd_bench(const RunConfig& cfg, int n, int length, std::uint64_t seed, std::ostream& out) {
  if (n < 2) throw ArgumentError("bench needs --n >= 2");
  if (n > cfg.matrix_free_cap) {
    throw SizeError("--n " + std::to_string(n) + " exceeds matrix_free_cap = " +
                    std::to_string(cfg.matrix_free_cap));
  }
  if (length < 1) throw ArgumentError("--len must be positive");

  using Clock = std::chrono::steady_clock;
  const BraidWord w = random_word(n, length, seed);
  StateVector psi(n);
  std::size_t groups = 0;
  double slowest = 0.0;
  const auto start = Clock::now();
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    const auto t0 = Clock::now();
    groups += apply_generator_inplace(psi.amplitudes(), n, *it);
    slowest = std::max(slowest, std::chrono::duration<double>(Clock::now() - t0).count());
  }
  const double total = std::max(std::chrono::duration<double>(Clock::now() - start).count(), 1e-9);
  const double per_generator = total / length;
  const double amps_per_sec = static_cast<double>(psi.dim()) * length / total;

  switch (cfg.format) {
    case OutputFormat::kTable: {
      Table t({"field", "value"});
      t.add({"n", std::to_string(n)});
      t.add({"len", std::to_string(length)});
      t.add({"seed", std::to_string(seed)});
      t.add({"word", to_string(w)});
      t.add({"word_seconds", fmt_num(total)});
      t.add({"seconds_per_generator", fmt_num(per_generator)});
      t.add({"slowest_generator_seconds", fmt_num(slowest)});
      t.add({"amplitudes_per_second", fmt_num(amps_per_sec)});
      t.add({"groups_transformed", std::to_string(groups)});
      t.add({"final_norm", fmt_num(psi.norm())});
      t.print(out);
      break;
    }
    case OutputFormat::kJsonLines: {
      Json j;
      j["n"] = n;
      j["len"] = length;
      j["seed"] = seed;
      j["word"] = to_string(w);
      j["word_seconds"] = json_num(total);
      j["seconds_per_generator"] = json_num(per_generator);
      j["slowest_generator_seconds"] = json_num(slowest);
      j["amplitudes_per_second"] = json_num(amps_per_sec);
      j["groups_transformed"] = groups;
      j["final_norm"] = json_num(psi.norm());
      emit(out, j);
      break;
    }
    case OutputFormat::kCsv:
      out << "n,len,seed,word_seconds,seconds_per_generator,amplitudes_per_second,"
             "groups_transformed\n"
          << n << ',' << length << ',' << seed << ',' << fmt_num(total) << ','
          << fmt_num(per_generator) << ',' << fmt_num(amps_per_sec) << ',' << groups << '\n';
      break;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"braidq: braid-group gates, generalized Bell states and their entanglement"};
  app.name(args.empty() ? "braidq" : args.front());
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::optional<std::string> format;
  std::optional<double> tol;
  std::optional<double> eigen_tol;
  std::optional<double> ppt;
  std::optional<int> dense_cap;
  std::optional<int> mf_cap;
  app.add_option("--config", config_path,
                 std::string("JSON config file (default: $") + kConfigEnv + ")");
  app.add_option("--format", format, "table, json-lines or csv");
  app.add_option("--tol", tol, "construction tolerance");
  app.add_option("--eigen-tol", eigen_tol, "eigenproblem tolerance");
  app.add_option("--ppt-threshold", ppt, "smallest PT eigenvalue counted as non-negative");
  app.add_option("--dense-cap", dense_cap, "largest n for dense matrices");
  app.add_option("--matrix-free-cap", mf_cap, "largest n for matrix-free application");

  int n = 3;
  int trials = 20;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> index;
  std::string trace;
  int length = 20;
  WordOptions word;

  auto* verify = app.add_subcommand("verify", "check the Yang-Baxter and Artin relations");
  verify->add_option("--n", n, "qubit count (>= 3)");
  verify->add_option("--trials", trials, "random states per relation");
  verify->add_option("--seed", seed, "random seed");

  auto* bell = app.add_subcommand("bell", "generalized Bell states");
  bell->add_option("--n", n, "qubit count")->required();
  bell->add_option("--index", index, "1-based state index (default: whole basis)");

  auto* analyze_cmd = app.add_subcommand("analyze", "entanglement of a reduced Bell state");
  analyze_cmd->add_option("--n", n, "qubit count")->required();
  analyze_cmd->add_option("--index", index, "1-based state index")->required();
  analyze_cmd->add_option("--trace", trace, "qubit labels to trace out, e.g. C or C,D");

  auto* word_cmd = app.add_subcommand("word", "braid-word tools");
  word_cmd->add_option("action", word.action, "parse, reduce, normalize, compile, apply, diagram")
      ->required()
      ->check(CLI::IsMember({"parse", "reduce", "normalize", "compile", "apply", "diagram"}));
  word_cmd->add_option("word", word.text, "braid word, e.g. \"s1 s2'\"")->required();
  word_cmd->add_option("--n", word.n, "qubit count (default: strands)");
  word_cmd->add_option("--strands", word.strands, "strand count (default: max index + 1)");
  word_cmd->add_option("--basis-index", word.basis_index, "apply to |C index>");
  word_cmd->add_option("--state-file", word.state_file, "apply to a state fixture");
  word_cmd->add_option("--output", word.output, "write the diagram to a file");

  auto* bench = app.add_subcommand("bench", "time matrix-free word application");
  bench->add_option("--n", n, "qubit count")->required();
  bench->add_option("--len", length, "word length");
  bench->add_option("--seed", seed, "random seed");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("braidq");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    RunConfig cfg;
    if (config_path.empty()) {
      if (const char* env = std::getenv(kConfigEnv); env && *env) config_path = env;
    }
    if (!config_path.empty()) cfg = load_config_file(config_path, cfg);
    if (format) cfg.format = parse_format(*format);
    if (tol) cfg.tol_construction = *tol;
    if (eigen_tol) cfg.tol_eigen = *eigen_tol;
    if (ppt) cfg.ppt_threshold = *ppt;
    if (dense_cap) cfg.dense_cap = *dense_cap;
    if (mf_cap) cfg.matrix_free_cap = *mf_cap;
    if (seed) cfg.seed = *seed;
    cfg.validate();

    if (*verify) return cmd_verify(cfg, n, trials, cfg.seed, out);
    if (*bell) return cmd_bell(cfg, n, index, out);
    if (*analyze_cmd) return cmd_analyze(cfg, n, *index, trace, out);
    if (*word_cmd) return cmd_word(cfg, word, out, err);
    if (*bench) return cmd_bench(cfg, n, length, cfg.seed, out);
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace braidq::cli
