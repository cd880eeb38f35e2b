// Python bindings: a thin string-based facade over the C++ core.  Words and
// tableaux travel as their text forms ("2321", "66325/421/3"), shapes as
// comma-separated parts ("3,1").

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "qcrystal/core.hpp"
#include "qcrystal/crystal.hpp"
#include "qcrystal/insertion.hpp"
#include "qcrystal/lr.hpp"
#include "qcrystal/tableaux.hpp"
#include "qcrystal/verify.hpp"

namespace py = pybind11;
using namespace qcrystal;

namespace {

std::optional<std::string> opt_str(const std::optional<Word>& w) {
  if (!w) return std::nullopt;
  return w->str();
}

std::vector<Word> parse_rows(const std::string& text, int n) {
  std::vector<Word> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find('/', pos);
    if (next == std::string::npos) next = text.size();
    rows.push_back(Word::parse(text.substr(pos, next - pos), n));
    if (next == text.size()) break;
    pos = next + 1;
  }
  return rows;
}

std::map<std::string, long long> table_out(const Decomposition& d) {
  std::map<std::string, long long> out;
  for (const auto& [shape, mult] : d) out[shape.str()] = mult;
  return out;
}

}  // namespace

PYBIND11_MODULE(_qcrystal, m) {
  m.doc() = "crystal combinatorics for words and shifted decomposition tableaux";

  m.def(
      "weight_of",
      [](const std::string& w, int n) { return weight_of(Word::parse(w, n)).coords; },
      py::arg("word"), py::arg("n"), "letter multiplicities of a word");

  m.def(
      "apply_f",
      [](const std::string& w, int n, const std::string& op) {
        return opt_str(apply_f(Word::parse(w, n), OperatorIndex::parse(op)));
      },
      py::arg("word"), py::arg("n"), py::arg("op"),
      "lowering operator; op is \"1\"..\"n-1\" or \"1bar\"..; None when it vanishes");
  m.def(
      "apply_e",
      [](const std::string& w, int n, const std::string& op) {
        return opt_str(apply_e(Word::parse(w, n), OperatorIndex::parse(op)));
      },
      py::arg("word"), py::arg("n"), py::arg("op"), "raising operator");

  m.def(
      "eps", [](const std::string& w, int n, int i) { return eps(Word::parse(w, n), i); },
      py::arg("word"), py::arg("n"), py::arg("i"));
  m.def(
      "phi", [](const std::string& w, int n, int i) { return phi(Word::parse(w, n), i); },
      py::arg("word"), py::arg("n"), py::arg("i"));

  m.def(
      "weyl_s", [](const std::string& w, int n, int i) { return weyl_s(Word::parse(w, n), i).str(); },
      py::arg("word"), py::arg("n"), py::arg("i"), "simple reflection");
  m.def(
      "weyl_w",
      [](const std::string& w, int n, const std::vector<int>& reduced) {
        return weyl_w(Word::parse(w, n), reduced).str();
      },
      py::arg("word"), py::arg("n"), py::arg("reduced"),
      "composite reflection for a reduced word; the last generator acts first");
  m.def("longest_element_word", &longest_element_word, py::arg("n"));

  m.def(
      "is_highest", [](const std::string& w, int n) { return is_highest(Word::parse(w, n)); },
      py::arg("word"), py::arg("n"));
  m.def(
      "is_lowest", [](const std::string& w, int n) { return is_lowest(Word::parse(w, n)); },
      py::arg("word"), py::arg("n"));
  m.def(
      "is_strict_reverse_lattice",
      [](const std::string& w, int n) { return is_strict_reverse_lattice(Word::parse(w, n)); },
      py::arg("word"), py::arg("n"));

  m.def(
      "highest_weight_vectors",
      [](int n, int length) {
        std::vector<std::string> out;
        for (const Word& w : highest_weight_vectors(n, length)) out.push_back(w.str());
        return out;
      },
      py::arg("n"), py::arg("length"));

  m.def(
      "hook_split",
      [](const std::string& w, int n) -> std::optional<std::size_t> {
        auto split = hook_split(Word::parse(w, n));
        if (!split) return std::nullopt;
        return split->pivot;
      },
      py::arg("word"), py::arg("n"), "1-based pivot of the hook split, or None");
  m.def(
      "max_hook_subword_len",
      [](const std::string& w, int n) { return max_hook_subword_len(Word::parse(w, n)); },
      py::arg("word"), py::arg("n"));

  m.def(
      "is_ssdt", [](const std::string& rows, int n) { return is_ssdt(parse_rows(rows, n)); },
      py::arg("rows"), py::arg("n"), "membership test for slash-joined rows");

  m.def(
      "enumerate_ssdt",
      [](const std::string& shape, int n) {
        std::vector<std::string> out;
        for (const Ssdt& t : enumerate_ssdt(StrictPartition::parse(shape), n))
          out.push_back(t.str());
        return out;
      },
      py::arg("shape"), py::arg("n"));

  m.def(
      "highest_tableau",
      [](const std::string& shape, int n) {
        return highest_tableau(StrictPartition::parse(shape), n).str();
      },
      py::arg("shape"), py::arg("n"));
  m.def(
      "lowest_tableau",
      [](const std::string& shape, int n) {
        return lowest_tableau(StrictPartition::parse(shape), n).str();
      },
      py::arg("shape"), py::arg("n"));

  m.def(
      "reading_word",
      [](const std::string& t, int n) { return Ssdt::parse(t, n).reading_word().str(); },
      py::arg("tableau"), py::arg("n"));

  m.def(
      "insert_letter",
      [](const std::string& t, int letter, int n) {
        InsertionTrace trace = insert_letter(Ssdt::parse(t, n), letter);
        return py::make_tuple(trace.result.str(), trace.cell.row, trace.cell.col);
      },
      py::arg("tableau"), py::arg("letter"), py::arg("n"),
      "returns (tableau, new cell row, new cell column)");
  m.def(
      "insert_word",
      [](const std::string& t, const std::string& w, int n) {
        return insert_word(Ssdt::parse(t, n), Word::parse(w, n)).str();
      },
      py::arg("tableau"), py::arg("letters"), py::arg("n"));
  m.def(
      "insert_tableau",
      [](const std::string& t, const std::string& other, int n) {
        return insert_tableau_left(Ssdt::parse(t, n), Ssdt::parse(other, n)).str();
      },
      py::arg("tableau"), py::arg("other"), py::arg("n"));
  m.def(
      "insert_tableau_right",
      [](const std::string& t, const std::string& into, int n) {
        RightInsertion r = insert_tableau_right(Ssdt::parse(t, n), Ssdt::parse(into, n));
        return py::make_tuple(r.product.str(), r.recording.str());
      },
      py::arg("tableau"), py::arg("into"), py::arg("n"),
      "returns (product, recording tableau grid)");

  m.def(
      "rsk",
      [](const std::string& w, int n) {
        RskPair pair = rsk(Word::parse(w, n));
        return py::make_tuple(pair.p.str(), pair.q.str());
      },
      py::arg("word"), py::arg("n"), "word to (insertion, recording) pair");
  m.def(
      "inverse_rsk",
      [](const std::string& p, const std::string& q, int n) {
        return inverse_rsk(Ssdt::parse(p, n), StandardShiftedTableau::parse(q)).str();
      },
      py::arg("p"), py::arg("q"), py::arg("n"));

  m.def(
      "knuth_psi",
      [](const std::string& w, int n) { return knuth_psi(Word::parse(w, n)).str(); },
      py::arg("word"), py::arg("n"));

  m.def(
      "lr_set",
      [](const std::string& lambda, const std::string& mu, const std::string& nu, int n) {
        std::vector<std::string> out;
        for (const Word& w : lr_set(StrictPartition::parse(lambda), StrictPartition::parse(mu),
                                    StrictPartition::parse(nu), n))
          out.push_back(w.str());
        return out;
      },
      py::arg("lam"), py::arg("mu"), py::arg("nu"), py::arg("n"));
  m.def(
      "lr_coefficient",
      [](const std::string& lambda, const std::string& mu, const std::string& nu, int n) {
        return lr_coefficient(StrictPartition::parse(lambda), StrictPartition::parse(mu),
                              StrictPartition::parse(nu), n);
      },
      py::arg("lam"), py::arg("mu"), py::arg("nu"), py::arg("n"));
  m.def(
      "lr_tilde_tableaux",
      [](const std::string& lambda, const std::string& mu, const std::string& nu, int n) {
        std::vector<std::string> out;
        for (const auto& q : lr_tilde_tableaux(StrictPartition::parse(lambda),
                                               StrictPartition::parse(mu),
                                               StrictPartition::parse(nu), n))
          out.push_back(q.str());
        return out;
      },
      py::arg("lam"), py::arg("mu"), py::arg("nu"), py::arg("n"));

  m.def(
      "decompose_tensor",
      [](const std::string& lambda, const std::string& mu, int n, const std::string& method) {
        return table_out(decompose_tensor(StrictPartition::parse(lambda),
                                          StrictPartition::parse(mu), n, parse_method(method)));
      },
      py::arg("lam"), py::arg("mu"), py::arg("n"), py::arg("method") = "lattice",
      "multiplicity table keyed by the target shape text");
  m.def(
      "decompose_power",
      [](int n, int length) { return table_out(decompose_power(n, length)); },
      py::arg("n"), py::arg("length"));

  m.def(
      "graph_dot",
      [](const std::string& word, const std::string& shape, int n, bool include_bar) {
        Word start(n);
        if (!word.empty())
          start = Word::parse(word, n);
        else if (!shape.empty())
          start = highest_tableau(StrictPartition::parse(shape), n).reading_word();
        else
          throw std::invalid_argument("graph_dot needs a word or a shape");
        return to_dot(component(start, include_bar));
      },
      py::arg("word") = "", py::arg("shape") = "", py::arg("n") = 3,
      py::arg("include_bar") = false, "DOT text of the connected component");

  m.def(
      "verify",
      [](const std::string& level, unsigned seed) {
        VerifyReport report =
            run_verification(level == "full" ? VerifyLevel::full : VerifyLevel::quick, seed);
        std::vector<py::tuple> out;
        for (const CheckResult& c : report.checks)
          out.push_back(py::make_tuple(c.name, c.range, c.pass, c.detail));
        return py::make_tuple(report.all_pass(), out);
      },
      py::arg("level") = "quick", py::arg("seed") = 20240915u,
      "returns (all_pass, [(name, range, pass, detail), ...])");
}
