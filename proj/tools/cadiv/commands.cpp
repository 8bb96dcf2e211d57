#include "cadiv/commands.hpp"

#include "cadiv/classification.hpp"
#include "cadiv/document.hpp"
#include "cadiv/enumeration.hpp"
#include "cadiv/germ.hpp"
#include "cadiv/report.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace cadiv::io {

namespace {

NeighborhoodClass detect_class(const GermAnalysis& a) {
  if (a.graph.glue()) return NeighborhoodClass::nonnormal_nss;
  if (a.high_index_points().size() >= 2) return NeighborhoodClass::semistable;
  return NeighborhoodClass::normal_nss;
}

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  const long long v = std::stoll(s, &used);
  if (used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

}  // namespace

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
  GraphDocument doc;
  GermAnalysis analysis;
  try {
    doc = load_document(opt.path);
    analysis = analyze_germ(to_graph(doc));
  } catch (const DocumentError& e) {
    err << "cadiv: " << opt.path << ": " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "cadiv: " << opt.path << ": " << e.what() << "\n";
    return kExitInputError;
  }

  NeighborhoodClass cls;
  if (opt.cls == "auto") {
    cls = detect_class(analysis);
  } else if (opt.cls == "normal") {
    cls = NeighborhoodClass::normal_nss;
  } else if (opt.cls == "nonnormal") {
    cls = NeighborhoodClass::nonnormal_nss;
  } else if (opt.cls == "semistable") {
    cls = NeighborhoodClass::semistable;
  } else {
    err << "cadiv: unknown class '" << opt.cls << "'\n";
    return kExitInputError;
  }

  NeighborhoodVerdict verdict;
  try {
    switch (cls) {
      case NeighborhoodClass::normal_nss:
        verdict = classify_normal_nss(analysis);
        break;
      case NeighborhoodClass::nonnormal_nss:
        verdict = classify_nonnormal(analysis);
        break;
      case NeighborhoodClass::semistable:
        verdict = classify_semistable_germ(analysis);
        break;
    }
  } catch (const ClassificationError& e) {
    err << "cadiv: " << e.what() << "\n";
    return kExitConditionsFail;
  }

  if (opt.axial && cls == NeighborhoodClass::semistable) {
    const auto [k, k2] = *opt.axial;
    const auto& w = verdict.conditions.front().witnesses;
    auto val = [&](const std::string& name) {
      for (const auto& x : w) {
        if (x.name == name) return to_int64(x.value.numerator());
      }
      return std::int64_t{0};
    };
    const TDecomposition p{val("n"), val("d"), val("a"), false};
    const TDecomposition q{val("n'"), val("d'"), val("a'"), false};
    try {
      const SPosition sp = semistable_s_position(p, q, k, k2);
      verdict.s_position = sp.s;
      verdict.extras.push_back({"S_A_m", Rat(sp.m)});
      verdict.extras.push_back({"s_formula", Rat(sp.s)});
      if (verdict.target_d == 3) verdict.extras.push_back({"s_k+k'", Rat(k + k2)});
    } catch (const std::invalid_argument& e) {
      err << "cadiv: " << e.what() << "\n";
      return kExitInputError;
    }
  }

  const ReportInput r{&doc, &analysis, &verdict, opt.cls == "auto" ? "auto" : "hint", opt.axial};
  if (opt.json) {
    out << report_json(r).dump(2) << "\n";
  } else {
    out << report_text(r);
  }
  return verdict.passed() ? kExitPass : kExitConditionsFail;
}

int cmd_enumerate(const EnumerateOptions& opt, std::ostream& out, std::ostream& err) {
  ojson catalog;
  try {
    if (opt.kind == "semistable") {
      const std::int64_t bound = opt.bound > 0 ? opt.bound : kDefaultPellBound;
      catalog = semistable_catalog(opt.k, bound, enumerate_semistable(opt.k, bound));
    } else if (opt.kind == "normal") {
      catalog = normal_catalog(opt.max_n, opt.max_d, opt.max_chain,
                               enumerate_normal_nss(opt.max_n, opt.max_d, opt.max_chain));
    } else {
      err << "cadiv: unknown catalog kind '" << opt.kind << "'\n";
      return kExitInputError;
    }
  } catch (const std::invalid_argument& e) {
    err << "cadiv: " << e.what() << "\n";
    return kExitInputError;
  }

  const std::string text = catalog.dump(2) + "\n";
  if (opt.out.empty()) {
    out << text;
    return kExitPass;
  }
  std::ofstream file(opt.out);
  if (!file || !(file << text) || !file.flush()) {
    err << "cadiv: cannot write '" << opt.out << "'\n";
    return kExitInputError;
  }
  out << catalog["count"].get<std::size_t>() << " record(s) written to " << opt.out << " ("
      << catalog["note"].get<std::string>() << ")\n";
  return kExitPass;
}

int cmd_hj(const HjOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    if (opt.chain) {
      HJChain chain;
      std::stringstream ss(*opt.chain);
      std::string item;
      while (std::getline(ss, item, ',')) chain.entries.push_back(parse_int(item));
      const auto [n, a] = hj_recognize(chain);
      out << n << "/" << a << " ⇒ " << CyclicQuotient(n, a).str() << "\n";
      return kExitPass;
    }
    if (opt.fraction) {
      out << hj_expand(opt.fraction->first, opt.fraction->second).str() << "\n";
      return kExitPass;
    }
    err << "cadiv: hj needs 'n a' or --chain\n";
  } catch (const std::exception& e) {
    err << "cadiv: " << e.what() << "\n";
  }
  return kExitInputError;
}

int cmd_dot(const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    out << to_dot(load_document(path));
    return kExitPass;
  } catch (const DocumentError& e) {
    err << "cadiv: " << path << ": " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace cadiv::io
