// Copyright 2026 The qcmut authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcmut/io.hpp"

#include <zlib.h>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qcmut/errors.hpp"
#include "qcmut/gate_catalog.hpp"

namespace qcmut {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kGzipLevel = 6;
constexpr std::string_view kPlaceholderPragma = "// QCRMUT-PLACEHOLDER";

[[noreturn]] void fail_qasm(std::size_t line, const std::string& message) {
  throw UnsupportedQasm("line " + std::to_string(line) + ": " + message);
}

std::string trim(std::string_view s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
    ++begin;
  }
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
    --end;
  }
  return std::string(s.substr(begin, end - begin));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(s.substr(start));
      return parts;
    }
    parts.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string format_qasm_param(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw LoadError("read: cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot open '" + path.string() + "' for writing");
  }
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) {
    throw Error("short write to '" + path.string() + "'");
  }
}

std::vector<std::uint8_t> gzip_compress(std::string_view data) {
  z_stream zs{};
  // windowBits 15+16 selects the gzip wrapper. With no explicit header the
  // mtime field is zero, which keeps the output byte-stable across runs.
  if (deflateInit2(&zs, kGzipLevel, Z_DEFLATED, 15 + 16, 8,
                   Z_DEFAULT_STRATEGY) != Z_OK) {
    throw Error("deflateInit2 failed");
  }
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
  zs.avail_in = static_cast<uInt>(data.size());

  std::vector<std::uint8_t> out;
  std::uint8_t chunk[16384];
  int rc = Z_OK;
  do {
    zs.next_out = chunk;
    zs.avail_out = sizeof(chunk);
    rc = deflate(&zs, Z_FINISH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      deflateEnd(&zs);
      throw Error("deflate failed with code " + std::to_string(rc));
    }
    out.insert(out.end(), chunk, chunk + (sizeof(chunk) - zs.avail_out));
  } while (rc != Z_STREAM_END);
  deflateEnd(&zs);
  return out;
}

std::string gzip_decompress(const std::vector<std::uint8_t>& data) {
  z_stream zs{};
  // windowBits 15+32 auto-detects gzip or zlib wrappers.
  if (inflateInit2(&zs, 15 + 32) != Z_OK) {
    throw LoadError("decompress: inflateInit2 failed");
  }
  zs.next_in = const_cast<Bytef*>(data.data());
  zs.avail_in = static_cast<uInt>(data.size());

  std::string out;
  char chunk[16384];
  int rc = Z_OK;
  do {
    zs.next_out = reinterpret_cast<Bytef*>(chunk);
    zs.avail_out = sizeof(chunk);
    rc = inflate(&zs, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      inflateEnd(&zs);
      throw LoadError("decompress: not a valid gzip stream (code " +
                      std::to_string(rc) + ")");
    }
    out.append(chunk, sizeof(chunk) - zs.avail_out);
  } while (rc != Z_STREAM_END);
  inflateEnd(&zs);
  return out;
}

nlohmann::ordered_json instruction_to_json(const CircuitInstruction& instr) {
  ordered_json j;
  j["kind"] = std::string(to_string(instr.kind));
  j["name"] = instr.name;
  j["qubits"] = instr.qubits;
  j["clbits"] = instr.clbits;
  j["params"] = instr.params;
  j["label"] = instr.label;
  return j;
}

CircuitInstruction instruction_from_json(const json& j) {
  CircuitInstruction instr;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "gate") {
    instr.kind = InstructionKind::Gate;
  } else if (kind == "placeholder") {
    instr.kind = InstructionKind::Placeholder;
  } else {
    throw LoadError("schema: unknown instruction kind '" + kind + "'");
  }
  instr.name = j.at("name").get<std::string>();
  instr.qubits = j.at("qubits").get<std::vector<int>>();
  instr.clbits = j.at("clbits").get<std::vector<int>>();
  instr.params = j.at("params").get<std::vector<double>>();
  instr.label = j.value("label", std::string{});
  return instr;
}

nlohmann::ordered_json circuit_to_json(const QuantumCircuit& circuit) {
  ordered_json j;
  j["name"] = circuit.name();
  j["num_qubits"] = circuit.num_qubits();
  j["num_clbits"] = circuit.num_clbits();
  auto instrs = ordered_json::array();
  for (const auto& instr : circuit.instructions()) {
    instrs.push_back(instruction_to_json(instr));
  }
  j["instructions"] = std::move(instrs);
  return j;
}

QuantumCircuit circuit_from_json(const json& j) {
  std::vector<CircuitInstruction> instrs;
  for (const auto& item : j.at("instructions")) {
    instrs.push_back(instruction_from_json(item));
  }
  return QuantumCircuit(j.at("name").get<std::string>(),
                        j.at("num_qubits").get<int>(),
                        j.at("num_clbits").get<int>(), std::move(instrs));
}

nlohmann::ordered_json record_to_json(const MutationRecord& record) {
  ordered_json j;
  j["operator"] = std::string(to_string(record.op));
  j["index"] = record.index;
  j["before"] =
      record.before ? instruction_to_json(*record.before) : ordered_json{};
  j["after"] =
      record.after ? instruction_to_json(*record.after) : ordered_json{};
  j["mutant_id"] = record.mutant_id;
  j["seed_used"] = record.seed_used;
  return j;
}

MutationRecord record_from_json(const json& j) {
  MutationRecord record;
  record.op =
      mutation_operator_from_string(j.at("operator").get<std::string>());
  record.index = j.at("index").get<long long>();
  if (!j.at("before").is_null()) {
    record.before = instruction_from_json(j.at("before"));
  }
  if (!j.at("after").is_null()) {
    record.after = instruction_from_json(j.at("after"));
  }
  record.mutant_id = j.at("mutant_id").get<long long>();
  record.seed_used = j.at("seed_used").get<std::uint64_t>();
  return record;
}

std::size_t save_mutant(const QuantumCircuit& circuit,
                        const MutationRecord* record,
                        const std::filesystem::path& path) {
  ordered_json doc;
  doc["format_version"] = kQczFormatVersion;
  doc["circuit"] = circuit_to_json(circuit);
  doc["record"] = record ? record_to_json(*record) : ordered_json{};

  const std::vector<std::uint8_t> packed = gzip_compress(doc.dump());
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot open '" + path.string() + "' for writing");
  }
  out.write(reinterpret_cast<const char*>(packed.data()),
            static_cast<std::streamsize>(packed.size()));
  if (!out) {
    throw Error("short write to '" + path.string() + "'");
  }
  return packed.size();
}

std::pair<QuantumCircuit, std::optional<MutationRecord>> load_mutant(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw LoadError("read: cannot open '" + path.string() + "'");
  }
  std::vector<std::uint8_t> packed(std::istreambuf_iterator<char>(in), {});

  const std::string text = gzip_decompress(packed);

  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw LoadError(std::string("parse: ") + e.what());
  }

  try {
    if (doc.at("format_version").get<int>() != kQczFormatVersion) {
      throw LoadError("schema: unsupported format_version " +
                      doc.at("format_version").dump());
    }
    QuantumCircuit circuit = circuit_from_json(doc.at("circuit"));
    std::optional<MutationRecord> record;
    if (doc.contains("record") && !doc.at("record").is_null()) {
      record = record_from_json(doc.at("record"));
    }
    return {std::move(circuit), std::move(record)};
  } catch (const LoadError&) {
    throw;
  } catch (const json::exception& e) {
    throw LoadError(std::string("schema: ") + e.what());
  }
}

std::string mutant_filename(long long mutant_id) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "mutant_%06lld.qcz", mutant_id);
  return buf;
}

std::string export_qasm(const QuantumCircuit& circuit) {
  const auto& catalog = GateCatalog::instance();
  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  os << "qreg q[" << circuit.num_qubits() << "];\n";
  if (circuit.num_clbits() > 0) {
    os << "creg c[" << circuit.num_clbits() << "];\n";
  }

  for (const auto& instr : circuit.instructions()) {
    if (instr.is_placeholder()) {
      if (instr.name.find_first_of(" \t") != std::string::npos) {
        throw UnsupportedQasm("placeholder name '" + instr.name +
                              "' contains whitespace");
      }
      os << kPlaceholderPragma << " name=" << instr.name << " qubits=";
      for (std::size_t i = 0; i < instr.qubits.size(); ++i) {
        if (i > 0) os << ",";
        os << instr.qubits[i];
      }
      os << "\n";
      continue;
    }
    if (!instr.clbits.empty()) {
      throw UnsupportedQasm("instruction '" + instr.name +
                            "' uses classical bits");
    }
    if (instr.name != "barrier" && !catalog.contains(instr.name)) {
      throw UnsupportedQasm("gate '" + instr.name +
                            "' is outside the export subset");
    }
    os << instr.name;
    if (!instr.params.empty()) {
      os << "(";
      for (std::size_t i = 0; i < instr.params.size(); ++i) {
        if (i > 0) os << ",";
        os << format_qasm_param(instr.params[i]);
      }
      os << ")";
    }
    os << " ";
    for (std::size_t i = 0; i < instr.qubits.size(); ++i) {
      if (i > 0) os << ",";
      os << "q[" << instr.qubits[i] << "]";
    }
    os << ";\n";
  }
  return os.str();
}

namespace {

// Parameter grammar: optional sign, then a numeric literal or a pi term
// with optional integer-or-real multiplier and divisor.
double parse_qasm_param(const std::string& raw, std::size_t line) {
  std::string s;
  for (const char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) fail_qasm(line, "empty parameter expression");

  double sign = 1.0;
  if (s.front() == '+' || s.front() == '-') {
    if (s.front() == '-') sign = -1.0;
    s.erase(s.begin());
  }
  if (s.empty()) fail_qasm(line, "empty parameter expression");

  const auto parse_number = [&](const std::string& text) {
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || text.empty()) {
      fail_qasm(line, "cannot parse parameter '" + raw + "'");
    }
    return value;
  };

  const std::size_t pi_pos = s.find("pi");
  if (pi_pos == std::string::npos) {
    return sign * parse_number(s);
  }

  double multiplier = 1.0;
  if (pi_pos > 0) {
    if (s[pi_pos - 1] != '*') {
      fail_qasm(line, "cannot parse parameter '" + raw + "'");
    }
    multiplier = parse_number(s.substr(0, pi_pos - 1));
  }
  double divisor = 1.0;
  const std::string rest = s.substr(pi_pos + 2);
  if (!rest.empty()) {
    if (rest.front() != '/') {
      fail_qasm(line, "cannot parse parameter '" + raw + "'");
    }
    divisor = parse_number(rest.substr(1));
    if (divisor == 0.0) fail_qasm(line, "division by zero in parameter");
  }
  return sign * multiplier * std::numbers::pi / divisor;
}

struct QasmRegister {
  std::string name;
  int size = 0;
};

// "ident[3]" -> (ident, 3); "ident" -> (ident, -1).
std::pair<std::string, int> parse_operand(const std::string& raw,
                                          std::size_t line) {
  const std::string s = trim(raw);
  const std::size_t open = s.find('[');
  if (open == std::string::npos) return {s, -1};
  if (s.back() != ']') fail_qasm(line, "malformed operand '" + raw + "'");
  const std::string index = s.substr(open + 1, s.size() - open - 2);
  char* end = nullptr;
  const long value = std::strtol(index.c_str(), &end, 10);
  if (end != index.c_str() + index.size() || index.empty() || value < 0) {
    fail_qasm(line, "malformed operand index '" + raw + "'");
  }
  return {s.substr(0, open), static_cast<int>(value)};
}

}  // namespace

QuantumCircuit import_qasm(std::string_view text, std::string_view name) {
  const auto& catalog = GateCatalog::instance();
  std::optional<QasmRegister> qreg;
  std::optional<QasmRegister> creg;
  std::vector<CircuitInstruction> instructions;
  bool saw_version = false;

  const auto resolve_qubit = [&](const std::string& operand,
                                 std::size_t line) {
    const auto [reg, index] = parse_operand(operand, line);
    if (!qreg) fail_qasm(line, "qubit operand before qreg declaration");
    if (reg != qreg->name) {
      fail_qasm(line, "unknown quantum register '" + reg + "'");
    }
    if (index < 0 || index >= qreg->size) {
      fail_qasm(line, "qubit index " + std::to_string(index) +
                          " outside q[" + std::to_string(qreg->size) + "]");
    }
    return index;
  };

  const std::vector<std::string> lines = split(text, '\n');
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::size_t line = li + 1;
    std::string content = trim(lines[li]);
    if (content.empty()) continue;

    if (content.starts_with("//")) {
      if (!content.starts_with(kPlaceholderPragma)) continue;
      // Placeholder pragma: "// QCRMUT-PLACEHOLDER name=<n> qubits=<i,...>".
      std::string payload = trim(content.substr(kPlaceholderPragma.size()));
      std::string ph_name;
      std::vector<int> ph_qubits;
      for (const auto& field : split(payload, ' ')) {
        if (field.empty()) continue;
        if (field.starts_with("name=")) {
          ph_name = field.substr(5);
        } else if (field.starts_with("qubits=")) {
          for (const auto& part : split(field.substr(7), ',')) {
            char* end = nullptr;
            const long q = std::strtol(part.c_str(), &end, 10);
            if (end != part.c_str() + part.size() || part.empty()) {
              fail_qasm(line, "malformed placeholder qubit list");
            }
            ph_qubits.push_back(static_cast<int>(q));
          }
        } else {
          fail_qasm(line, "unknown placeholder field '" + field + "'");
        }
      }
      if (ph_name.empty() || ph_qubits.empty()) {
        fail_qasm(line, "placeholder pragma needs name= and qubits=");
      }
      if (!qreg) fail_qasm(line, "placeholder before qreg declaration");
      for (const int q : ph_qubits) {
        if (q < 0 || q >= qreg->size) {
          fail_qasm(line, "placeholder qubit " + std::to_string(q) +
                              " outside q[" + std::to_string(qreg->size) +
                              "]");
        }
      }
      instructions.push_back(
          CircuitInstruction::placeholder(ph_name, ph_qubits));
      continue;
    }

    const std::size_t comment = content.find("//");
    if (comment != std::string::npos) {
      content = trim(content.substr(0, comment));
      if (content.empty()) continue;
    }

    for (std::string statement : split(content, ';')) {
      statement = trim(statement);
      if (statement.empty()) continue;

      if (statement.starts_with("OPENQASM")) {
        const std::string version = trim(statement.substr(8));
        if (version != "2.0") {
          fail_qasm(line, "unsupported OPENQASM version '" + version + "'");
        }
        saw_version = true;
        continue;
      }
      if (!saw_version) fail_qasm(line, "missing OPENQASM 2.0 header");
      if (statement.starts_with("include")) continue;

      if (statement.starts_with("qreg") || statement.starts_with("creg")) {
        const bool quantum = statement.starts_with("qreg");
        const auto [reg, size] = parse_operand(trim(statement.substr(4)), line);
        if (size < 1 && quantum) {
          fail_qasm(line, "quantum register needs at least one qubit");
        }
        if (size < 0) fail_qasm(line, "malformed register declaration");
        auto& slot = quantum ? qreg : creg;
        if (slot) {
          fail_qasm(line, std::string("only one ") +
                              (quantum ? "qreg" : "creg") + " is supported");
        }
        slot = QasmRegister{reg, size};
        continue;
      }

      for (const std::string_view construct :
           {"measure", "reset", "if", "gate", "opaque"}) {
        if (statement.starts_with(construct)) {
          fail_qasm(line, "'" + std::string(construct) +
                              "' is outside the supported subset");
        }
      }

      // Gate application: name[(params)] operand[, operand ...]
      std::size_t pos = 0;
      while (pos < statement.size() &&
             (std::isalnum(static_cast<unsigned char>(statement[pos])) ||
              statement[pos] == '_')) {
        ++pos;
      }
      const std::string gate_name = statement.substr(0, pos);
      if (gate_name.empty()) {
        fail_qasm(line, "cannot parse statement '" + statement + "'");
      }

      std::vector<double> params;
      if (pos < statement.size() && statement[pos] == '(') {
        const std::size_t close = statement.find(')', pos);
        if (close == std::string::npos) {
          fail_qasm(line, "unterminated parameter list");
        }
        for (const auto& piece :
             split(statement.substr(pos + 1, close - pos - 1), ',')) {
          params.push_back(parse_qasm_param(piece, line));
        }
        pos = close + 1;
      }

      std::vector<std::string> operands;
      for (const auto& piece : split(statement.substr(pos), ',')) {
        const std::string operand = trim(piece);
        if (!operand.empty()) operands.push_back(operand);
      }

      if (gate_name == "barrier") {
        std::vector<int> qubits;
        if (operands.empty()) fail_qasm(line, "barrier without operands");
        for (const auto& operand : operands) {
          const auto [reg, index] = parse_operand(operand, line);
          if (!qreg || reg != qreg->name) {
            fail_qasm(line, "unknown quantum register '" + reg + "'");
          }
          if (index < 0) {
            for (int q = 0; q < qreg->size; ++q) qubits.push_back(q);
          } else {
            qubits.push_back(resolve_qubit(operand, line));
          }
        }
        instructions.push_back(
            CircuitInstruction::gate("barrier", std::move(qubits)));
        continue;
      }

      if (!catalog.contains(gate_name)) {
        fail_qasm(line,
                  "gate '" + gate_name + "' is outside the supported subset");
      }
      const EquivClassKey cls = catalog.equivalence_class_of(gate_name);
      if (static_cast<std::size_t>(cls.num_params) != params.size()) {
        fail_qasm(line, "gate '" + gate_name + "' expects " +
                            std::to_string(cls.num_params) +
                            " parameter(s), got " +
                            std::to_string(params.size()));
      }
      if (static_cast<std::size_t>(cls.num_qubits) != operands.size()) {
        fail_qasm(line, "gate '" + gate_name + "' expects " +
                            std::to_string(cls.num_qubits) +
                            " operand(s), got " +
                            std::to_string(operands.size()));
      }
      std::vector<int> qubits;
      for (const auto& operand : operands) {
        const int q = resolve_qubit(operand, line);
        if (std::find(qubits.begin(), qubits.end(), q) != qubits.end()) {
          fail_qasm(line, "duplicate qubit operand q[" + std::to_string(q) +
                              "] for gate '" + gate_name + "'");
        }
        qubits.push_back(q);
      }
      instructions.push_back(CircuitInstruction::gate(
          gate_name, std::move(qubits), std::move(params)));
    }
  }

  if (!saw_version) {
    throw UnsupportedQasm("line 1: missing OPENQASM 2.0 header");
  }
  if (!qreg) {
    throw UnsupportedQasm("no qreg declaration found");
  }
  return QuantumCircuit(std::string(name), qreg->size,
                        creg ? creg->size : 0, std::move(instructions));
}

QuantumCircuit load_circuit(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".qasm") {
    return import_qasm(read_file(path), path.stem().string());
  }
  if (ext == ".qcz") {
    return load_mutant(path).first;
  }
  throw LoadError("read: unsupported circuit extension '" + ext + "'");
}

nlohmann::ordered_json generation_report_to_json(
    const GenerationReport& report) {
  ordered_json j;
  j["circuit"] = report.circuit_name;
  j["num_mutants"] = report.num_mutants;
  j["seed"] = report.seed;
  j["elapsed_seconds"] = report.elapsed_seconds;
  ordered_json histogram;
  for (const auto op :
       {MutationOperator::Insert, MutationOperator::Delete,
        MutationOperator::Rename, MutationOperator::Retarget}) {
    const auto it = report.operator_histogram.find(op);
    histogram[std::string(to_string(op))] =
        it == report.operator_histogram.end() ? 0 : it->second;
  }
  j["operator_histogram"] = std::move(histogram);
  j["tool_version"] = report.tool_version;
  return j;
}

std::filesystem::path write_generation_report(
    const GenerationReport& report, const std::filesystem::path& dir) {
  const std::filesystem::path path = dir / "generation_report.json";
  write_file(path, generation_report_to_json(report).dump(2) + "\n");
  return path;
}

OracleSpec oracle_from_json(const json& j) {
  if (!j.is_object()) {
    throw LoadError("schema: oracle document must be a JSON object");
  }
  OracleSpec oracle;
  try {
    for (const auto& [input, body] : j.items()) {
      OracleEntry entry;
      for (const auto& output : body.at("valid_outputs")) {
        entry.valid_outputs.insert(output.get<std::string>());
      }
      if (body.contains("expected_distribution") &&
          !body.at("expected_distribution").is_null()) {
        std::map<std::string, double> dist;
        for (const auto& [output, prob] :
             body.at("expected_distribution").items()) {
          dist[output] = prob.get<double>();
        }
        entry.expected_distribution = std::move(dist);
      }
      oracle.inputs.emplace(input, std::move(entry));
    }
  } catch (const json::exception& e) {
    throw LoadError(std::string("schema: ") + e.what());
  }

  const std::vector<std::string> violations = validate_oracle(oracle);
  if (!violations.empty()) {
    throw LoadError("schema: " + violations[0]);
  }
  return oracle;
}

OracleSpec load_oracle(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw LoadError(std::string("parse: ") + e.what());
  }
  return oracle_from_json(doc);
}

nlohmann::ordered_json run_results_to_json(const RunResults& results) {
  ordered_json j;
  j["format_version"] = 1;
  j["circuit"] = results.circuit_name;
  j["mutants_dir"] = results.mutants_dir;
  j["num_qubits"] = results.num_qubits;
  j["shots"] = results.shots;
  j["seed"] = results.seed;
  j["simulator_version"] = results.simulator_version;
  ordered_json body;
  for (const auto& [mutant_id, per_input] : results.per_mutant) {
    ordered_json inputs;
    for (const auto& [input, counts] : per_input) {
      ordered_json obj;
      for (const auto& [output, count] : counts.counts) {
        obj[output] = count;
      }
      inputs[input] = std::move(obj);
    }
    body[std::to_string(mutant_id)] = std::move(inputs);
  }
  j["results"] = std::move(body);
  return j;
}

RunResults run_results_from_json(const json& j) {
  RunResults results;
  try {
    results.circuit_name = j.at("circuit").get<std::string>();
    results.mutants_dir = j.value("mutants_dir", std::string{});
    results.num_qubits = j.at("num_qubits").get<int>();
    results.shots = j.at("shots").get<long long>();
    results.seed = j.at("seed").get<std::uint64_t>();
    results.simulator_version = j.value("simulator_version", std::string{});
    for (const auto& [key, per_input] : j.at("results").items()) {
      long long mutant_id = 0;
      try {
        mutant_id = std::stoll(key);
      } catch (const std::exception&) {
        throw LoadError("schema: mutant id '" + key + "' is not numeric");
      }
      std::map<std::string, CountsDistribution> inputs;
      for (const auto& [input, obj] : per_input.items()) {
        CountsDistribution counts;
        counts.shots = results.shots;
        long long total = 0;
        for (const auto& [output, count] : obj.items()) {
          const auto value = count.get<long long>();
          if (value < 0) {
            throw LoadError("schema: negative count for output '" + output +
                            "'");
          }
          counts.counts[output] = value;
          total += value;
        }
        if (total != results.shots) {
          throw LoadError("schema: counts for mutant " + key + " input '" +
                          input + "' sum to " + std::to_string(total) +
                          ", expected " + std::to_string(results.shots));
        }
        inputs.emplace(input, std::move(counts));
      }
      results.per_mutant.emplace(mutant_id, std::move(inputs));
    }
  } catch (const LoadError&) {
    throw;
  } catch (const json::exception& e) {
    throw LoadError(std::string("schema: ") + e.what());
  }
  return results;
}

RunResults load_run_results(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw LoadError(std::string("parse: ") + e.what());
  }
  return run_results_from_json(doc);
}

}  // namespace qcmut
