#include "aritygap/io.hpp"

#include <fstream>
#include <sstream>

#include "aritygap/error.hpp"

namespace aritygap {
namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

struct LineReader {
  std::istream& in;
  std::size_t line_number = 0;

  // Next nonempty line, tokenized.
  std::optional<std::pair<std::vector<std::string>, std::size_t>> next() {
    std::string line;
    while (std::getline(in, line)) {
      ++line_number;
      auto tokens = split_tokens(line);
      if (!tokens.empty()) return std::pair{std::move(tokens), line_number};
    }
    return std::nullopt;
  }
};

std::size_t parse_count(const std::string& token, std::size_t line) {
  try {
    std::size_t consumed = 0;
    const unsigned long long value = std::stoull(token, &consumed);
    if (consumed != token.size()) throw std::invalid_argument(token);
    return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a nonnegative integer, got '" + token + "'");
  }
}

}  // namespace

const char* table_kind_name(TableKind kind) {
  switch (kind) {
    case TableKind::function: return "function";
    case TableKind::setfunction: return "setfunction";
    case TableKind::mobius: return "mobius";
  }
  return "unknown";
}

TableFile parse_table(std::istream& in) {
  LineReader reader{in};

  auto header = reader.next();
  if (!header || header->first != std::vector<std::string>{"aritygap-table", "v1"}) {
    throw ParseError(header ? header->second : 0, "expected header 'aritygap-table v1'");
  }

  std::optional<Carrier> domain;
  std::optional<Codomain> codomain;
  std::optional<std::size_t> arity;
  TableKind kind = TableKind::function;
  bool kind_seen = false;

  while (true) {
    auto entry = reader.next();
    if (!entry) throw ParseError(0, "missing 'table:' section");
    auto& [tokens, line] = *entry;
    const std::string& key = tokens[0];
    if (key == "table:") {
      if (tokens.size() != 1) throw ParseError(line, "'table:' takes no arguments");
      break;
    }
    if (key == "domain:") {
      if (domain) throw ParseError(line, "duplicate 'domain:'");
      if (tokens.size() < 2) throw ParseError(line, "'domain:' needs at least one element");
      try {
        domain.emplace("domain", std::vector<std::string>(tokens.begin() + 1, tokens.end()));
      } catch (const Error& e) {
        throw ParseError(line, e.what());
      }
    } else if (key == "codomain:") {
      if (codomain) throw ParseError(line, "duplicate 'codomain:'");
      if (tokens.size() == 2 && tokens[1] == "rational") {
        codomain = Codomain::rational();
      } else {
        if (tokens.size() < 2) throw ParseError(line, "'codomain:' needs at least one element");
        try {
          codomain = Codomain::carrier(
              Carrier("codomain", std::vector<std::string>(tokens.begin() + 1, tokens.end())));
        } catch (const Error& e) {
          throw ParseError(line, e.what());
        }
      }
    } else if (key == "arity:") {
      if (arity) throw ParseError(line, "duplicate 'arity:'");
      if (tokens.size() != 2) throw ParseError(line, "'arity:' needs one number");
      arity = parse_count(tokens[1], line);
      if (*arity == 0) throw ParseError(line, "arity must be at least 1");
    } else if (key == "kind:") {
      if (kind_seen) throw ParseError(line, "duplicate 'kind:'");
      kind_seen = true;
      if (tokens.size() != 2) throw ParseError(line, "'kind:' needs one word");
      if (tokens[1] == "function") {
        kind = TableKind::function;
      } else if (tokens[1] == "setfunction") {
        kind = TableKind::setfunction;
      } else if (tokens[1] == "mobius") {
        kind = TableKind::mobius;
      } else {
        throw ParseError(line, "unknown kind '" + tokens[1] + "'");
      }
    } else {
      throw ParseError(line, "unknown header entry '" + key + "'");
    }
  }

  if (!domain) throw ParseError(0, "missing 'domain:'");
  if (!codomain) throw ParseError(0, "missing 'codomain:'");
  if (!arity) throw ParseError(0, "missing 'arity:'");
  if (kind != TableKind::function) {
    if (domain->size() != 2) {
      throw ParseError(0, std::string(table_kind_name(kind)) + " needs a two-element domain");
    }
    if (!codomain->is_rational()) {
      throw ParseError(0, std::string(table_kind_name(kind)) + " needs a rational codomain");
    }
  }

  const std::size_t expected = table_size_for(domain->size(), *arity);
  std::vector<Rational> table(expected);
  std::vector<bool> filled(expected, false);
  std::size_t rows = 0;
  Tuple tuple(*arity, 0);

  while (auto entry = reader.next()) {
    auto& [tokens, line] = *entry;
    if (tokens.size() != *arity + 2) {
      throw ParseError(line, "expected " + std::to_string(*arity) + " arguments, '->' and a value");
    }
    if (tokens[*arity] != "->") throw ParseError(line, "expected '->' after the argument tuple");
    for (std::size_t i = 0; i < *arity; ++i) {
      const auto element = domain->index_of(tokens[i]);
      if (!element) throw ParseError(line, "unknown domain element '" + tokens[i] + "'");
      tuple[i] = *element;
    }
    std::size_t index = 0;
    for (std::size_t i = 0; i < *arity; ++i) index = index * domain->size() + tuple[i];
    if (filled[index]) throw ParseError(line, "duplicate row for this argument tuple");
    const std::string& value_token = tokens[*arity + 1];
    if (codomain->is_rational()) {
      try {
        table[index] = parse_rational(value_token);
      } catch (const Error& e) {
        throw ParseError(line, e.what());
      }
    } else {
      const auto value = codomain->as_carrier().index_of(value_token);
      if (!value) throw ParseError(line, "unknown codomain element '" + value_token + "'");
      table[index] = Rational(static_cast<std::int64_t>(*value));
    }
    filled[index] = true;
    ++rows;
  }

  if (rows != expected) {
    for (std::size_t index = 0; index < expected; ++index) {
      if (!filled[index]) {
        std::string missing;
        std::size_t rest = index;
        Tuple t(*arity, 0);
        for (std::size_t i = *arity; i-- > 0;) {
          t[i] = rest % domain->size();
          rest /= domain->size();
        }
        for (std::size_t i = 0; i < *arity; ++i) {
          if (i) missing += ' ';
          missing += domain->symbol(t[i]);
        }
        throw ParseError(0, "missing row for argument tuple '" + missing + "'");
      }
    }
  }

  return TableFile{kind, FiniteFunction(std::move(*domain), *arity, std::move(*codomain),
                                        std::move(table))};
}

TableFile parse_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::parse_error, "cannot open '" + path + "'");
  return parse_table(in);
}

void write_table(std::ostream& out, const FiniteFunction& fn, TableKind kind) {
  out << "aritygap-table v1\n";
  out << "domain:";
  for (const auto& symbol : fn.domain().symbols()) out << ' ' << symbol;
  out << '\n';
  if (fn.codomain().is_rational()) {
    out << "codomain: rational\n";
  } else {
    out << "codomain:";
    for (const auto& symbol : fn.codomain().as_carrier().symbols()) out << ' ' << symbol;
    out << '\n';
  }
  out << "arity: " << fn.arity() << '\n';
  out << "kind: " << table_kind_name(kind) << '\n';
  out << "table:\n";
  Tuple tuple(fn.arity(), 0);
  for (std::size_t t = 0; t < fn.table_size(); ++t) {
    fn.decode(t, tuple);
    for (std::size_t i = 0; i < fn.arity(); ++i) {
      if (i) out << ' ';
      out << fn.domain().symbol(tuple[i]);
    }
    out << " -> ";
    if (fn.codomain().is_rational()) {
      out << to_string(fn.value(t));
    } else {
      out << fn.codomain().as_carrier().symbol(fn.value_index(t));
    }
    out << '\n';
  }
}

std::string table_to_string(const FiniteFunction& fn, TableKind kind) {
  std::ostringstream out;
  write_table(out, fn, kind);
  return out.str();
}

SetFunction set_function_of(const TableFile& file) {
  if (file.kind != TableKind::setfunction) {
    fail(ErrorCode::invalid_argument, "table kind is not 'setfunction'");
  }
  return to_set_function(file.fn);
}

MobiusCoefficients mobius_of(const TableFile& file) {
  if (file.kind != TableKind::mobius) {
    fail(ErrorCode::invalid_argument, "table kind is not 'mobius'");
  }
  const SetFunction raw = to_set_function(file.fn);
  return MobiusCoefficients{raw.n, raw.values};
}

FiniteFunction table_of(const SetFunction& v) { return from_set_function(v); }

FiniteFunction table_of(const MobiusCoefficients& m) {
  return from_set_function(SetFunction{m.n, m.values});
}

Poset parse_poset(std::istream& in) {
  LineReader reader{in};

  auto header = reader.next();
  if (!header || header->first != std::vector<std::string>{"aritygap-poset", "v1"}) {
    throw ParseError(header ? header->second : 0, "expected header 'aritygap-poset v1'");
  }

  auto elements_line = reader.next();
  if (!elements_line || elements_line->first[0] != "elements:") {
    throw ParseError(elements_line ? elements_line->second : 0, "expected 'elements:'");
  }
  if (elements_line->first.size() < 2) {
    throw ParseError(elements_line->second, "'elements:' needs at least one element");
  }
  std::optional<Carrier> carrier;
  try {
    carrier.emplace("poset", std::vector<std::string>(elements_line->first.begin() + 1,
                                                      elements_line->first.end()));
  } catch (const Error& e) {
    throw ParseError(elements_line->second, e.what());
  }

  auto covers_line = reader.next();
  if (!covers_line || covers_line->first != std::vector<std::string>{"covers:"}) {
    throw ParseError(covers_line ? covers_line->second : 0, "expected 'covers:'");
  }

  std::vector<std::pair<std::size_t, std::size_t>> covers;
  while (auto entry = reader.next()) {
    auto& [tokens, line] = *entry;
    if (tokens.size() != 3 || tokens[1] != "<") {
      throw ParseError(line, "expected a cover line 'x < y'");
    }
    const auto low = carrier->index_of(tokens[0]);
    if (!low) throw ParseError(line, "unknown element '" + tokens[0] + "'");
    const auto high = carrier->index_of(tokens[2]);
    if (!high) throw ParseError(line, "unknown element '" + tokens[2] + "'");
    covers.emplace_back(*low, *high);
  }

  try {
    return Poset::from_covers(std::move(*carrier), covers);
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

Poset parse_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::parse_error, "cannot open '" + path + "'");
  return parse_poset(in);
}

void write_poset(std::ostream& out, const Poset& p) {
  out << "aritygap-poset v1\n";
  out << "elements:";
  for (const auto& symbol : p.carrier().symbols()) out << ' ' << symbol;
  out << '\n';
  out << "covers:\n";
  for (const auto& [low, high] : p.covers()) {
    out << p.carrier().symbol(low) << " < " << p.carrier().symbol(high) << '\n';
  }
}

std::string poset_to_string(const Poset& p) {
  std::ostringstream out;
  write_poset(out, p);
  return out.str();
}

}  // namespace aritygap
