#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dslice/commands.hpp"
#include "dslice/errors.hpp"

namespace {

using dslice::Json;

std::string slurp(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Inline JSON, or the contents of a file.
Json json_argument(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return Json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw dslice::PreconditionError("cannot read " + arg);
  return Json::parse(slurp(in));
}

template <typename T>
T expect_kind(const dslice::Expression& e, const char* what) {
  if (const auto* v = std::get_if<T>(&e)) return *v;
  throw dslice::PreconditionError(std::string("expected ") + what + ", got " + dslice::to_string(e));
}

void emit(const Json& doc, bool human) {
  if (human) {
    std::cout << dslice::render_human(doc);
  } else {
    std::cout << doc.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Doubly slice links and Seifert fibered spaces: invariants, embedding verdicts and lattice searches"};
  app.require_subcommand(1);
  bool human = false;
  app.add_flag("--human", human, "Readable text instead of JSON");

  std::string expr;
  auto* sfs = app.add_subcommand("sfs", "Invariants and embedding verdict for S2(e; p/q, ...)");
  sfs->add_option("expression", expr, "Seifert space, e.g. \"S2(0; 5/2, -5/2, 5, -5)\"")->required();

  auto* mont = app.add_subcommand("montesinos", "Components, cover and slicing verdicts for M(e; p/q, ...)");
  mont->add_option("expression", expr, "Montesinos link, e.g. \"M(0; 5, 5/2, -5/2, -5)\"")->required();

  auto* pret = app.add_subcommand("pretzel", "Classification of a pretzel link P(a, b, c, d)");
  pret->add_option("expression", expr, "Pretzel link, e.g. \"P(3, 5, -5, -3)\"")->required();

  std::string lattice_input;
  std::size_t m = 0;
  unsigned threads = 1;
  auto* lat = app.add_subcommand("lattice-search", "Integer factorizations A^T A = Q");
  lat->add_option("input", lattice_input, "S2 expression, matrix JSON {\"n\", \"entries\"}, or a JSON file")->required();
  auto* m_opt = lat->add_option("--m", m, "Rows of A (default: rank of Q)");
  lat->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  std::string link_input;
  auto* part = app.add_subcommand("partitions", "Quasi-orientations admitting partition pairs (necessary conditions)");
  part->add_option("input", link_input, "Link data JSON {\"n\", \"lk\", \"slice\"} or a JSON file")->required();

  std::string batch_path;
  unsigned jobs = 1;
  auto* batch = app.add_subcommand("batch", "JSONL in, JSONL out");
  batch->add_option("file", batch_path, "Input file, or - for standard input")->required();
  batch->add_option("--jobs", jobs, "Parallel workers")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sfs->parsed()) {
      emit(dslice::run_sfs(expect_kind<dslice::SeifertInvariants>(dslice::parse_expression(expr), "an S2 space")),
           human);
    } else if (mont->parsed()) {
      const auto e = dslice::parse_expression(expr);
      if (const auto* p = std::get_if<dslice::PretzelParams>(&e)) {
        emit(dslice::run_montesinos(p->link()), human);
      } else {
        emit(dslice::run_montesinos(expect_kind<dslice::MontesinosLink>(e, "a Montesinos link")), human);
      }
    } else if (pret->parsed()) {
      emit(dslice::run_pretzel(expect_kind<dslice::PretzelParams>(dslice::parse_expression(expr), "a pretzel link")),
           human);
    } else if (lat->parsed()) {
      dslice::LatticeRequest req;
      req.threads = threads;
      if (*m_opt) req.m = m;
      const bool looks_json = !lattice_input.empty() && lattice_input.front() == '{';
      if (looks_json || std::filesystem::is_regular_file(lattice_input)) {
        req.matrix = dslice::matrix_from_json(json_argument(lattice_input));
      } else {
        req.space = expect_kind<dslice::SeifertInvariants>(dslice::parse_expression(lattice_input), "an S2 space");
      }
      emit(dslice::run_lattice_search(req), human);
    } else if (part->parsed()) {
      emit(dslice::run_partitions(dslice::link_data_from_json(json_argument(link_input))), human);
    } else if (batch->parsed()) {
      std::vector<std::string> lines;
      std::ifstream file;
      std::istream* in = &std::cin;
      if (batch_path != "-") {
        file.open(batch_path);
        if (!file) throw dslice::PreconditionError("cannot read " + batch_path);
        in = &file;
      }
      for (std::string line; std::getline(*in, line);) lines.push_back(line);
      for (const auto& result : dslice::run_batch(lines, jobs)) std::cout << result.dump() << "\n";
    }
  } catch (...) {
    auto [err, code] = dslice::describe_current_exception();
    std::cerr << err.dump() << "\n";
    return code;
  }
  return 0;
}
