#include "dslice/commands.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "dslice/classifier.hpp"
#include "dslice/errors.hpp"
#include "dslice/lattice.hpp"
#include "dslice/plumbing.hpp"

namespace dslice {

namespace {

Json embed_json(const EmbedVerdict& v) {
  Json out{{"answer", v.answer == Answer::Yes ? "YES" : "NO"}};
  if (v.answer == Answer::Yes) {
    Json classes = Json::array();
    for (const auto& c : v.certificate)
      classes.push_back({{"class", to_json(c.representative)}, {"multiplicity", c.multiplicity}});
    out["certificate"] = {{"classes", classes}, {"normal_form", to_string(paired_form(v.certificate))}};
    return out;
  }
  Json witness{{"explanation", v.describe()}};
  switch (v.reason) {
    case NoReason::EulerNonzero:
      witness["reason"] = "euler-nonzero";
      witness["euler"] = to_json(v.euler);
      break;
    case NoReason::Unpaired: {
      witness["reason"] = "unpaired";
      Json unmatched = Json::array();
      for (const auto& u : v.unmatched) unmatched.push_back(to_json(u));
      witness["unmatched"] = unmatched;
      break;
    }
    case NoReason::CommonFactor:
      witness["reason"] = "common-factor";
      witness["first"] = to_json(v.common_factor->first);
      witness["second"] = to_json(v.common_factor->second);
      witness["gcd"] = to_json(v.common_factor->gcd);
      break;
    case NoReason::None:
      break;
  }
  out["witness"] = witness;
  return out;
}

std::string both_label(Status s, int components) {
  if (s == Status::Yes) return components == 2 ? "YES-both" : "YES";
  return to_string(s);
}

Json sfs_body(const SeifertInvariants& y) {
  const ExpansionReduction reduced = expansion_reduce(y);
  return {
      {"euler", to_json(euler_number(y))},
      {"b1", first_betti(y)},
      {"homology", homology(y).to_string()},
      {"canonical_form", to_string(canonical_form(y))},
      {"embeds_ZHS1xS3", embed_json(embeds_in_zhs1xs3(y))},
      {"bounds_QHS1xB3", bounds_qhs1xb3(y)},
      {"expansion", {{"base", to_string(reduced.base)}, {"steps", reduced.steps}}},
  };
}

class SfsCache {
 public:
  Json get(const SeifertInvariants& y) {
    const std::string key = to_string(canonical_form(y));
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = entries_.find(key);
      if (it != entries_.end()) return it->second;
    }
    Json body = sfs_body(y);
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.emplace(key, std::move(body)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::string, Json> entries_;
};

Json run_sfs_cached(const SeifertInvariants& y, SfsCache* cache) {
  Json out = cache ? cache->get(y) : sfs_body(y);
  out["input"] = to_string(y);
  return out;
}

Json run_expression_cached(const Expression& e, SfsCache* cache) {
  if (const auto* y = std::get_if<SeifertInvariants>(&e)) return run_sfs_cached(*y, cache);
  if (const auto* m = std::get_if<MontesinosLink>(&e)) return run_montesinos(*m);
  return run_pretzel(std::get<PretzelParams>(e));
}

Json witness_json(const ObstructionWitness& w, const std::vector<ArmClass>& classes) {
  return {{"wbar", to_json(w.wbar)},
          {"x", to_json(w.x)},
          {"modulus", to_json(w.modulus)},
          {"residue", to_json(w.residue)},
          {"classes", {to_json(classes[w.class_i].representative), to_json(classes[w.class_j].representative)}},
          {"gcd", to_json(w.gcd)}};
}

const char* definiteness_name(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite:
      return "positive-definite";
    case Definiteness::PositiveSemidefinite:
      return "positive-semidefinite";
    case Definiteness::Indefinite:
      break;
  }
  return "indefinite";
}

Json batch_line(const std::string& line, SfsCache* cache) {
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) throw ParseError("empty batch line", 0);
  if (line[first] != '{') {
    Json doc = Json::parse(line, nullptr, false);
    const std::string text = doc.is_string() ? doc.get<std::string>() : line;
    return run_expression_cached(parse_expression(text), cache);
  }
  Json doc = Json::parse(line, nullptr, false);
  if (doc.is_discarded()) throw ParseError("batch line is not valid JSON", first);
  if (!doc.contains("verb") || !doc["verb"].is_string()) throw PreconditionError("batch object needs a \"verb\"");
  if (!doc.contains("input")) throw PreconditionError("batch object needs an \"input\"");
  const std::string verb = doc["verb"].get<std::string>();
  const Json& input = doc["input"];
  if (verb == "partitions") return run_partitions(link_data_from_json(input));
  if (verb == "lattice-search") {
    LatticeRequest req;
    if (input.is_string()) {
      const Expression e = parse_expression(input.get<std::string>());
      if (!std::holds_alternative<SeifertInvariants>(e)) throw PreconditionError("lattice-search needs an S2 space");
      req.space = std::get<SeifertInvariants>(e);
    } else {
      req.matrix = matrix_from_json(input);
    }
    if (doc.contains("m")) req.m = doc["m"].get<std::size_t>();
    if (doc.contains("threads")) req.threads = doc["threads"].get<unsigned>();
    return run_lattice_search(req);
  }
  if (!input.is_string()) throw PreconditionError("verb " + verb + " needs an expression string");
  const Expression e = parse_expression(input.get<std::string>());
  if (verb == "sfs" && std::holds_alternative<SeifertInvariants>(e)) return run_expression_cached(e, cache);
  if (verb == "montesinos" && std::holds_alternative<MontesinosLink>(e)) return run_expression_cached(e, cache);
  if (verb == "montesinos" && std::holds_alternative<PretzelParams>(e))
    return run_montesinos(std::get<PretzelParams>(e).link());
  if (verb == "pretzel" && std::holds_alternative<PretzelParams>(e)) return run_expression_cached(e, cache);
  throw PreconditionError("verb " + verb + " does not accept " + to_string(e));
}

void render(const Json& doc, int depth, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  if (doc.is_object()) {
    for (const auto& [key, value] : doc.items()) {
      if (value.is_structured() && !value.empty() &&
          !(value.is_array() && std::all_of(value.begin(), value.end(), [](const Json& v) { return v.is_primitive(); }))) {
        out << pad << key << ":\n";
        render(value, depth + 1, out);
      } else {
        out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
  } else if (doc.is_array()) {
    for (const auto& value : doc) {
      if (value.is_structured()) {
        out << pad << "-\n";
        render(value, depth + 1, out);
      } else {
        out << pad << "- " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
  } else {
    out << pad << (doc.is_string() ? doc.get<std::string>() : doc.dump()) << "\n";
  }
}

}  // namespace

Json run_sfs(const SeifertInvariants& y) { return run_sfs_cached(y, nullptr); }

Json run_montesinos(const MontesinosLink& link) {
  const SliceVerdict v = slice_verdict(link);
  Json weak_by = Json::object();
  for (const auto& w : v.weak_ds) weak_by[w.orientation] = to_string(w.status);
  Status weak = Status::Yes;
  for (const auto& w : v.weak_ds)
    if (w.status != Status::Yes) weak = Status::Unknown;
  Json out{{"input", to_string(link)},
           {"components", v.components},
           {"dbc", to_string(double_branched_cover(link))},
           {"weak_ds", both_label(weak, v.components)},
           {"weak_ds_by_quasi_orientation", weak_by},
           {"weak_ds_certificate", both_label(weak_ds_certificate(link), v.components)},
           {"mutant_weak_ds", both_label(mutant_weak_ds(link), v.components)},
           {"strong_ds", to_string(v.strong.status)},
           {"reasons", v.reasons}};
  if (v.strong.witness) out["strong_ds_witness"] = embed_json(*v.strong.witness)["witness"];
  return out;
}

Json run_pretzel(const PretzelParams& p) {
  const MontesinosLink link = p.link();
  Json out{{"input", to_string(p)}, {"montesinos", run_montesinos(link)}};
  if (p.strands.size() == 4 && component_count(link) == 2) {
    const PretzelClass c = classify_4strand_pretzel(p.strands[0], p.strands[1], p.strands[2], p.strands[3]);
    out["classification"] = c == PretzelClass::SliceAndWeaklyDoublySlice ? "slice+WDS-both" : "not-slice";
  } else {
    out["classification"] = nullptr;
    out["classification_note"] = "defined for two-component pretzel links with four strands";
  }
  return out;
}

Json run_expression(const Expression& e) { return run_expression_cached(e, nullptr); }

Json run_lattice_search(const LatticeRequest& request) {
  std::optional<PlumbingGraph> graph;
  IntMatrix q;
  Json out = Json::object();
  if (request.space) {
    graph = star_plumbing(normalize_positive(*request.space));
    q = gram_matrix(*graph);
    out["input"] = to_string(*request.space);
    out["plumbing_boundary"] = to_string(boundary(*graph));
  } else if (request.matrix) {
    q = *request.matrix;
  } else {
    throw PreconditionError("lattice-search needs a matrix or an S2 space");
  }
  if (!q.is_symmetric()) throw PreconditionError("Q must be symmetric");
  const SemidefinitenessReport sd = semidefiniteness(q);
  out["gram"] = matrix_to_json(q);
  out["definiteness"] = definiteness_name(sd.kind);
  if (sd.kind == Definiteness::Indefinite) throw PreconditionError("Q is not positive semidefinite");
  const std::size_t rank = q.rows() - sd.nullity;
  const std::size_t m = request.m.value_or(rank);
  out["nullity"] = sd.nullity;
  out["m"] = m;

  SearchOptions options;
  options.threads = request.threads;
  if (graph) options.plumbing = &*graph;
  const auto found = enumerate_factorizations(q, m, options);
  out["count"] = found.size();
  Json list = Json::array();
  for (const auto& f : found) list.push_back(to_json(f.matrix));
  out["factorizations"] = list;

  if (!graph || sd.nullity != 1) return out;
  const SeifertInvariants y = boundary(*graph);
  out["kernel_vector"] = to_json(kernel_vector(*graph).entries);
  if (!bounds_qhs1xb3(y)) return out;

  const auto classes = arm_classes(*graph);
  Json class_json = Json::array();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    class_json.push_back({{"representative", to_json(classes[i].representative)},
                          {"arms", classes[i].arms},
                          {"wbar", to_json(image_detection_vector(*graph, i))}});
  }
  out["arm_classes"] = class_json;
  Json partitions = Json::array();
  for (const auto& f : found) {
    Json pairs = Json::array();
    for (const auto& c : central_row_structure(f.matrix, *graph).partition.classes) pairs.push_back({c[0], c[1]});
    partitions.push_back(pairs);
  }
  out["arm_partitions"] = partitions;

  const auto witness = coprimality_obstruction(*graph);
  if (!witness) {
    out["obstruction"] = nullptr;
    return out;
  }
  Json w = witness_json(*witness, classes);
  const BigVector v0 = kernel_vector(*graph).entries;
  bool refuted = true;
  for (std::size_t i = 0; i < found.size() && refuted; ++i)
    for (std::size_t j = i; j < found.size() && refuted; ++j)
      refuted = !torsion_image_test(found[i].matrix, found[j].matrix, v0, witness->x);
  w["refutes_every_pair"] = refuted;
  out["obstruction"] = w;
  return out;
}

Json run_partitions(const LinkData& data) {
  Json orientations = Json::array();
  const auto passing = weak_ds_orientation_filter(data);
  const std::size_t free = data.n - 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << free); ++mask) {
    std::vector<int> s(data.n, 1);
    for (std::size_t k = 0; k < free; ++k)
      if (mask & (std::size_t{1} << (free - 1 - k))) s[k + 1] = -1;
    Json pairs = Json::array();
    for (const auto& p : admissible_partitions(data, s))
      pairs.push_back({{"P1", to_string(p.first)}, {"P2", to_string(p.second)}});
    orientations.push_back({{"signs", s}, {"pairs", pairs}});
  }
  return {{"n", data.n},
          {"note", "necessary conditions only"},
          {"quasi_orientations", orientations},
          {"passing", passing}};
}

Json run_batch_line(const std::string& line) { return batch_line(line, nullptr); }

std::vector<Json> run_batch(const std::vector<std::string>& lines, unsigned jobs) {
  std::vector<Json> out(lines.size());
  SfsCache cache;
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < lines.size(); i = cursor++) {
      try {
        out[i] = batch_line(lines[i], &cache);
      } catch (...) {
        auto [err, code] = describe_current_exception();
        err["error"]["exit_code"] = static_cast<int>(code);
        out[i] = std::move(err);
      }
    }
  };
  const unsigned n = std::max(1u, jobs);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

std::pair<Json, ExitCode> describe_current_exception() {
  try {
    throw;
  } catch (const ParseError& e) {
    return {{{"error", {{"kind", "parse"}, {"message", e.what()}, {"position", e.position()}}}}, kParseFailure};
  } catch (const nlohmann::json::parse_error& e) {
    return {{{"error", {{"kind", "parse"}, {"message", e.what()}, {"position", e.byte}}}}, kParseFailure};
  } catch (const PreconditionError& e) {
    return {{{"error", {{"kind", "precondition"}, {"message", e.what()}}}}, kPreconditionFailure};
  } catch (const nlohmann::json::exception& e) {
    return {{{"error", {{"kind", "precondition"}, {"message", e.what()}}}}, kPreconditionFailure};
  } catch (const InternalInconsistency& e) {
    return {{{"error", {{"kind", "internal"}, {"message", e.what()}}}}, kInternalFailure};
  } catch (const std::exception& e) {
    return {{{"error", {{"kind", "internal"}, {"message", e.what()}}}}, kInternalFailure};
  }
}

std::string render_human(const Json& doc) {
  std::ostringstream out;
  render(doc, 0, out);
  return out.str();
}

}  // namespace dslice
