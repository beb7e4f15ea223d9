#include "clusterkl/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "clusterkl/census.hpp"
#include "clusterkl/ideals.hpp"
#include "clusterkl/kl.hpp"

namespace ckl {

namespace {

using nlohmann::json;

json perm_json(const Permutation& w) { return json(w.oneline()); }
json word_json(const Word& w) { return json(w.letters); }

json poly_json(const LaurentPoly& p) {
  json coeffs = json::object();
  for (auto [e, c] : p.coeffs()) coeffs[std::to_string(e)] = c;
  return json{{"v_coeffs", coeffs}, {"string", p.str()}};
}

// Segment boundaries 1-based in the serialized form.
json decomposition_json(const ClusterDecomposition& d) {
  json clusters = json::array();
  for (const auto& c : d.clusters) {
    auto central = c.central();
    clusters.push_back(json{{"start", c.start + 1},
                            {"m", c.m},
                            {"k", c.k},
                            {"central", {central[0] + 1, central[1] + 1,
                                         central[2] + 1}}});
  }
  json fillers = json::array();
  for (auto [b, e] : d.filler_segments())
    fillers.push_back(json{{"start", b + 1}, {"length", e - b}});
  return json{{"word", word_json(d.word)},
              {"rank", d.word.rank},
              {"clusters", clusters},
              {"fillers", fillers}};
}

struct Options {
  bool json_mode = false;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
};

void emit(const Options& opt, const json& payload,
          const std::function<void(std::ostream&)>& text) {
  if (opt.json_mode)
    *opt.out << payload.dump(2) << '\n';
  else
    text(*opt.out);
}

Permutation perm_arg(const std::string& flag_value) {
  return parse_permutation(flag_value);
}

int cmd_classify(const Options& opt, const std::string& wtext) {
  Permutation w = perm_arg(wtext);
  Classification c = classify(w);
  json payload{{"w", perm_json(w)},
               {"rank", w.rank()},
               {"n321", c.n321},
               {"fully_commutative", c.fully_commutative},
               {"freely_braided", c.freely_braided},
               {"maximally_clustered", c.maximally_clustered},
               {"hexagon_pattern_free", c.hexagon_pattern_free},
               {"mc_hexagon_avoiding", c.mc_hexagon_avoiding}};
  emit(opt, payload, [&](std::ostream& os) {
    os << "w: " << to_string(w) << '\n'
       << "rank: " << w.rank() << '\n'
       << "n321: " << c.n321 << '\n'
       << std::boolalpha
       << "fully_commutative: " << c.fully_commutative << '\n'
       << "freely_braided: " << c.freely_braided << '\n'
       << "maximally_clustered: " << c.maximally_clustered << '\n'
       << "hexagon_pattern_free: " << c.hexagon_pattern_free << '\n'
       << "mc_hexagon_avoiding: " << c.mc_hexagon_avoiding << '\n';
  });
  return 0;
}

int cmd_contract(const Options& opt, const std::string& wtext) {
  Permutation w = perm_arg(wtext);
  ClusterDecomposition d = contract(w);
  json payload = decomposition_json(d);
  payload["w"] = perm_json(w);
  payload["N"] = count_321(w);
  emit(opt, payload, [&](std::ostream& os) {
    os << "w: " << to_string(w) << '\n'
       << "word: " << to_string(d.word) << '\n'
       << "M: " << d.cluster_count() << '\n'
       << "N: " << count_321(w) << '\n';
    for (std::size_t i = 0; i < d.clusters.size(); ++i) {
      const auto& c = d.clusters[i];
      auto central = c.central();
      os << "cluster " << i + 1 << ": start=" << c.start + 1 << " m=" << c.m
         << " k=" << c.k << " central=" << central[0] + 1 << ','
         << central[1] + 1 << ',' << central[2] + 1 << '\n';
    }
  });
  return 0;
}

int cmd_heap(const Options& opt, const std::string& wtext,
             const std::string& wordtext, const std::string& masktext,
             bool classes) {
  Word word;
  if (!wordtext.empty()) {
    word = parse_word(wordtext);
  } else {
    word = some_reduced_word(perm_arg(wtext));
  }
  Heap h = heap_of(word);

  std::vector<char> marks;
  json decoration = nullptr;
  Mask mask;
  if (!masktext.empty()) {
    mask = parse_mask(masktext);
    MaskStats stats = defect_stats(word, mask);
    marks.assign(h.size(), 'o');
    std::vector<char> is_defect(h.size(), 0);
    for (int pos : stats.defect_positions) is_defect[pos - 1] = 1;
    for (int e = 0; e < h.size(); ++e) {
      if (mask.bits[e])
        marks[e] = '*';
      else
        marks[e] = is_defect[e] ? 'D' : 'o';
    }
    StringDiagram sd = string_diagram(h, &mask.bits);
    decoration = json{{"mask", to_string(mask)},
                      {"d", stats.d},
                      {"zero_defects", stats.zero_defects},
                      {"plain_zeros", stats.plain_zeros},
                      {"top", perm_json(sd.top)}};
  }

  json entries = json::array();
  for (int e = 0; e < h.size(); ++e)
    entries.push_back(json{{"column", h.column(e)}, {"level", h.level[e]}});
  json covers = json::array();
  for (auto [lo, hi] : h.covers) covers.push_back(json{lo + 1, hi + 1});
  json payload{{"word", word_json(word)},
               {"rank", word.rank},
               {"entries", entries},
               {"covers", covers}};
  if (!decoration.is_null()) payload["decoration"] = decoration;
  if (classes) {
    Permutation w = evaluate(word);
    auto cls = commutativity_classes(w);
    json words = json::array();
    for (const auto& heap : cls) words.push_back(word_json(heap.word));
    payload["classes"] = words;
  }

  emit(opt, payload, [&](std::ostream& os) {
    os << "word: " << to_string(word) << '\n';
    os << render_ascii(h, marks.empty() ? nullptr : &marks);
    if (!decoration.is_null()) {
      os << "legend: * mask-value 1, o plain-zero, D zero-defect\n"
         << "top: " << decoration["top"].dump() << '\n'
         << "d: " << decoration["d"].get<int>() << '\n';
    }
    if (classes) {
      Permutation w = evaluate(word);
      auto cls = commutativity_classes(w);
      os << "classes: " << cls.size() << '\n';
      for (const auto& heap : cls)
        os << "  " << to_string(heap.word) << '\n';
    }
  });
  return 0;
}

KLMethod parse_method(const std::string& m) {
  if (m == "masks") return KLMethod::masks;
  if (m == "recursion") return KLMethod::recursion;
  fail(errc::invalid_permutation, "unknown method " + m);
}

int cmd_kl(const Options& opt, const std::string& wtext,
           const std::string& xtext, const std::string& method, bool tsv) {
  Permutation w = perm_arg(wtext);
  KLOracle oracle;
  std::vector<KLTable> tables;
  if (method == "both") {
    tables.push_back(kl_table(w, KLMethod::masks, oracle, Execution::parallel));
    tables.push_back(
        kl_table(w, KLMethod::recursion, oracle, Execution::parallel));
    if (!(tables[0].rows == tables[1].rows))
      fail(errc::not_mc_hexagon_avoiding,
           "mask and recursion tables disagree");  // unreachable per theorem
  } else {
    tables.push_back(kl_table(w, parse_method(method), oracle,
                              Execution::parallel));
  }
  const KLTable& table = tables.front();

  if (!xtext.empty()) {
    Permutation x = perm_arg(xtext);
    if (x.rank() != w.rank()) fail(errc::rank_mismatch, "kl: ranks differ");
    const LaurentPoly* p = table.find(x);
    LaurentPoly value = p ? *p : LaurentPoly();
    json payload{{"w", perm_json(w)},
                 {"x", perm_json(x)},
                 {"method", method},
                 {"P", poly_json(value)}};
    emit(opt, payload,
         [&](std::ostream& os) { os << "P = " << value.str() << '\n'; });
    return 0;
  }

  json rows = json::array();
  for (const auto& [x, p] : table.rows)
    rows.push_back(json{{"x", perm_json(x)}, {"P", poly_json(p)}});
  json payload{{"w", perm_json(w)}, {"method", method}, {"rows", rows}};
  emit(opt, payload, [&](std::ostream& os) {
    (void)tsv;
    for (const auto& [x, p] : table.rows)
      os << to_string(x) << '\t' << p.str() << '\n';
  });
  return 0;
}

int cmd_cbasis(const Options& opt, const std::string& wtext,
               const std::string& method) {
  Permutation w = perm_arg(wtext);
  HeckeElement c(w.rank());
  if (method == "masks") {
    c = cprime(w);
  } else if (method == "recursion") {
    KLOracle oracle;
    if (length(w) > kRecursionLengthCap)
      fail(errc::cap_exceeded, "recursion capped at length " +
                                   std::to_string(kRecursionLengthCap));
    c = oracle.cprime(w);
  } else {
    fail(errc::invalid_permutation, "unknown method " + method);
  }
  const int lw = length(w);
  std::vector<std::pair<Permutation, LaurentPoly>> rows(c.terms().begin(),
                                                        c.terms().end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    int la = length(a.first), lb = length(b.first);
    if (la != lb) return la < lb;
    return a.first < b.first;
  });
  json terms = json::array();
  for (const auto& [x, p] : rows)
    terms.push_back(json{{"x", perm_json(x)},
                         {"coeff", poly_json(p)},
                         {"P", poly_json(p.shifted(lw))}});
  json payload{{"w", perm_json(w)}, {"l", lw}, {"terms", terms}};
  emit(opt, payload, [&](std::ostream& os) {
    os << "w: " << to_string(w) << '\n' << "l: " << lw << '\n';
    for (const auto& [x, p] : rows)
      os << "T[" << to_string(x) << "]\t" << p.str() << "\tP=" << p.shifted(lw).str()
         << '\n';
  });
  return 0;
}

int cmd_masks(const Options& opt, const std::string& wtext,
              const std::string& wordtext, const std::string& filter) {
  ClusterDecomposition d;
  if (!wtext.empty()) {
    d = contract(perm_arg(wtext));
  } else {
    Word word = parse_word(wordtext);
    if (filter == "10star")
      fail(errc::not_maximally_clustered,
           "the 10* filter needs a contracted decomposition; use --w");
    if (!is_reduced(word))
      fail(errc::not_reduced, "word " + to_string(word) + " is not reduced");
    d.word = word;
  }
  MaskFilter f =
      filter == "10star" ? MaskFilter::ten_star_avoiding : MaskFilter::all;

  json rows = json::array();
  std::ostringstream text;
  enumerate_masks(d, f, [&](const Mask& m) {
    MaskStats stats = defect_stats(d.word, m);
    Permutation x = subword_eval(d.word, m);
    bool bounded = deodhar_bound_holds(stats, m.proper());
    if (opt.json_mode) {
      rows.push_back(json{{"mask", to_string(m)},
                          {"subword", perm_json(x)},
                          {"d", stats.d},
                          {"zero_defects", stats.zero_defects},
                          {"plain_zeros", stats.plain_zeros},
                          {"bounded", bounded}});
    } else {
      text << to_string(m) << '\t' << to_string(x) << '\t' << stats.d << '\t'
           << stats.zero_defects << '\t' << stats.plain_zeros << '\t'
           << (bounded ? "yes" : "no") << '\n';
    }
  });
  json payload{{"word", word_json(d.word)},
               {"filter", filter},
               {"masks", rows}};
  emit(opt, payload, [&](std::ostream& os) {
    os << "mask\tsubword\td\tzero_defects\tplain_zeros\tbounded\n"
       << text.str();
  });
  return 0;
}

int cmd_verify(const Options& opt, int n, int sample, std::uint64_t seed) {
  std::optional<int> sample_opt;
  if (sample > 0) sample_opt = sample;
  SweepReport report = verify_theorem_sweep(n, sample_opt, seed);
  json payload{{"n", report.n},
               {"elements", report.elements},
               {"pairs", report.pairs},
               {"ok", report.ok()},
               {"failures", report.failures}};
  emit(opt, payload, [&](std::ostream& os) {
    os << "n: " << report.n << '\n'
       << "elements: " << report.elements << '\n'
       << "pairs: " << report.pairs << '\n'
       << "status: " << (report.ok() ? "ok" : "FAIL") << '\n';
    for (const auto& f : report.failures) os << "mismatch: " << f << '\n';
  });
  return report.ok() ? 0 : 1;
}

int cmd_census(const Options& opt, const std::vector<int>& ns) {
  std::vector<int> sorted = ns;
  std::sort(sorted.begin(), sorted.end());
  json payload = json::array();
  std::ostringstream text;
  for (int n : sorted) {
    auto rows = census(n);
    for (const auto& row : rows) {
      payload.push_back(
          json{{"n", n}, {"label", row.label}, {"count", row.count}});
      text << n << '\t' << row.label << '\t' << row.count << '\n';
    }
  }
  emit(opt, payload, [&](std::ostream& os) { os << text.str(); });
  return 0;
}

int cmd_ideal(const Options& opt, const std::string& ptext,
              const std::string& clsname, bool upper, bool characterize,
              int n) {
  PatternClass cls = PatternClass::by_name(clsname);
  Permutation p = perm_arg(ptext);
  json payload{{"p", perm_json(p)}, {"class", clsname}};
  std::ostringstream text;
  text << "p: " << to_string(p) << '\n' << "class: " << clsname << '\n';

  bool ideal = is_ideal_pattern(p, cls);
  payload["ideal"] = ideal;
  text << std::boolalpha << "ideal: " << ideal << '\n';

  if (upper) {
    UpperSet u = upper_set(p, cls);
    json members = json::array();
    for (const auto& m : u.members) {
      members.push_back(to_string(m));
      text << "member: " << to_string(m) << '\n';
    }
    payload["upper_set"] = members;
  }
  if (characterize) {
    CharacterizationReport r = characterization_check(cls, {p}, n);
    payload["characterization"] = json{
        {"n", n},
        {"equal", r.equal},
        {"class_size", r.class_size},
        {"heap_avoiders", r.heap_avoiders},
        {"pattern_avoiders", r.pattern_avoiders}};
    text << "characterization n=" << n << ": "
         << (r.equal ? "equal" : "COUNTEREXAMPLE") << " (class " << r.class_size
         << ", heap-avoiders " << r.heap_avoiders << ", pattern-avoiders "
         << r.pattern_avoiders << ")\n";
    if (!r.equal) {
      payload["characterization"]["heap_only"] = json::array();
      for (const auto& w : r.heap_only)
        payload["characterization"]["heap_only"].push_back(to_string(w));
    }
  }
  emit(opt, payload, [&](std::ostream& os) { os << text.str(); });
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact Kazhdan-Lusztig computations for clustered permutations"};
  app.require_subcommand(1);

  Options opt;
  opt.out = &out;
  opt.err = &err;

  std::string wtext, xtext, ptext, wordtext, masktext;
  std::string method = "masks";
  std::string cbasis_method = "masks";
  std::string filter = "10star";
  std::string clsname = "mc";
  std::vector<int> census_n;
  int n = 5, sample = 0, ideal_n = 0;
  std::uint64_t seed = 12345;
  bool tsv = false, classes = false, upper = false, characterize = false;

  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", opt.json_mode, "json output");
  };

  CLI::App* c_classify = app.add_subcommand("classify", "pattern classification");
  c_classify->add_option("perm", wtext, "permutation (positional)");
  c_classify->add_option("--w", wtext, "permutation");
  add_json(c_classify);

  CLI::App* c_contract = app.add_subcommand("contract", "contracted expression");
  c_contract->add_option("perm", wtext, "permutation (positional)");
  c_contract->add_option("--w", wtext, "permutation");
  add_json(c_contract);

  CLI::App* c_heap = app.add_subcommand("heap", "heap rendering");
  c_heap->add_option("--w", wtext, "permutation");
  c_heap->add_option("--word", wordtext, "reduced word, comma letters");
  c_heap->add_option("--mask", masktext, "mask bits, e.g. 10010");
  c_heap->add_flag("--classes", classes, "list commutativity classes");
  add_json(c_heap);

  CLI::App* c_kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomials");
  c_kl->add_option("--w", wtext, "permutation")->required();
  c_kl->add_option("--x", xtext, "row permutation");
  c_kl->add_option("--method", method, "masks|recursion|both");
  c_kl->add_flag("--tsv", tsv, "tsv table output");
  add_json(c_kl);

  CLI::App* c_cbasis = app.add_subcommand("cbasis", "KL basis element C'_w");
  c_cbasis->add_option("--w", wtext, "permutation")->required();
  c_cbasis->add_option("--method", cbasis_method, "masks|recursion");
  add_json(c_cbasis);

  CLI::App* c_masks = app.add_subcommand("masks", "mask enumeration");
  c_masks->add_option("--w", wtext, "permutation (contracted word)");
  c_masks->add_option("--word", wordtext, "explicit reduced word");
  c_masks->add_option("--filter", filter, "10star|all");
  add_json(c_masks);

  CLI::App* c_verify = app.add_subcommand("verify", "masks == recursion sweep");
  c_verify->add_option("--n", n, "rank")->required();
  c_verify->add_option("--sample", sample, "seeded sample count (0 = exhaustive)");
  c_verify->add_option("--seed", seed, "sample seed");
  add_json(c_verify);

  CLI::App* c_census = app.add_subcommand("census", "class counts over S_n");
  c_census->add_option("--n", census_n, "ranks")->required();
  add_json(c_census);

  CLI::App* c_ideal = app.add_subcommand("ideal", "ideal-pattern machinery");
  c_ideal->add_option("--p", ptext, "pattern permutation")->required();
  c_ideal->add_option("--cls", clsname, "mc|fb|all");
  c_ideal->add_flag("--upper-set", upper, "list U^P(p)");
  c_ideal->add_flag("--characterize", characterize,
                    "compare heap- and 1-line avoidance at rank --n");
  c_ideal->add_option("--n", ideal_n, "rank for --characterize");
  add_json(c_ideal);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (c_classify->parsed()) {
      if (wtext.empty()) {
        err << "usage error: classify needs a permutation\n";
        return 2;
      }
      return cmd_classify(opt, wtext);
    }
    if (c_contract->parsed()) {
      if (wtext.empty()) {
        err << "usage error: contract needs a permutation\n";
        return 2;
      }
      return cmd_contract(opt, wtext);
    }
    if (c_heap->parsed()) {
      if (wtext.empty() == wordtext.empty()) {
        err << "usage error: heap needs exactly one of --w, --word\n";
        return 2;
      }
      return cmd_heap(opt, wtext, wordtext, masktext, classes);
    }
    if (c_kl->parsed()) {
      if (method != "masks" && method != "recursion" && method != "both") {
        err << "usage error: --method must be masks, recursion or both\n";
        return 2;
      }
      return cmd_kl(opt, wtext, xtext, method, tsv);
    }
    if (c_cbasis->parsed()) return cmd_cbasis(opt, wtext, cbasis_method);
    if (c_masks->parsed()) {
      if (wtext.empty() == wordtext.empty()) {
        err << "usage error: masks needs exactly one of --w, --word\n";
        return 2;
      }
      if (filter != "10star" && filter != "all") {
        err << "usage error: --filter must be 10star or all\n";
        return 2;
      }
      return cmd_masks(opt, wtext, wordtext, filter);
    }
    if (c_verify->parsed()) return cmd_verify(opt, n, sample, seed);
    if (c_census->parsed()) return cmd_census(opt, census_n);
    if (c_ideal->parsed()) {
      if (characterize && ideal_n <= 0) {
        err << "usage error: --characterize needs --n\n";
        return 2;
      }
      return cmd_ideal(opt, ptext, clsname, upper, characterize, ideal_n);
    }
  } catch (const domain_error& e) {
    if (opt.json_mode) {
      json payload{{"error", {{"code", e.code_name()}, {"message", e.what()}}}};
      out << payload.dump(2) << '\n';
    }
    err << "error: " << e.code_name() << ": " << e.what() << '\n';
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace ckl
