#include "picod/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include "picod/gf.hpp"

namespace picod {

namespace {

std::string mode_name(KnowledgeMode mode) {
    return mode == KnowledgeMode::static_side_info ? "static" : "sequential";
}

KnowledgeMode mode_from_name(const std::string& name) {
    if (name == "static") return KnowledgeMode::static_side_info;
    if (name == "sequential") return KnowledgeMode::sequential;
    throw std::invalid_argument("unknown knowledge mode: " + name);
}

} // namespace

Json to_json(const DecentralizedCode& code) {
    Json j;
    j["instance"] = {{"m", code.instance.m},
                     {"t", code.instance.t},
                     {"S", code.instance.sizes},
                     {"kind", to_string(code.instance.kind)}};
    j["field"] = {{"b", code.generator.field().spec().b},
                  {"poly", code.generator.field().spec().poly}};
    j["beta"] = code.beta;
    j["knowledge_mode"] = mode_name(code.schedule.mode);

    Json rows = Json::array();
    for (int r = 0; r < code.generator.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < code.generator.cols(); ++c) row.push_back(code.generator.at(r, c));
        rows.push_back(std::move(row));
    }
    j["generator"] = std::move(rows);

    Json sched = Json::array();
    for (std::size_t r = 0; r < code.schedule.transmitter.size(); ++r)
        sched.push_back({{"row", r}, {"user", code.schedule.transmitter[r]}});
    j["schedule"] = std::move(sched);

    Rational len = code.length();
    j["length"] = {{"num", len.num()}, {"den", len.den()}};
    return j;
}

DecentralizedCode code_from_json(const Json& j) {
    try {
        const Json& ji = j.at("instance");
        ProblemInstance inst =
            ProblemInstance::complete(ji.at("m").get<int>(), ji.at("t").get<int>(),
                                      ji.at("S").get<std::vector<int>>());
        if (ji.at("kind").get<std::string>() != to_string(inst.kind))
            throw std::invalid_argument("stored kind does not match the size set");

        FieldSpec spec{j.at("field").at("b").get<int>(),
                       j.at("field").at("poly").get<std::uint32_t>()};
        const Field& field = Field::get(spec);

        int beta = j.at("beta").get<int>();
        if (beta < 1) throw std::invalid_argument("beta must be at least 1");

        const Json& rows = j.at("generator");
        int nrows = static_cast<int>(rows.size());
        Matrix g(nrows, inst.m * beta, field);
        for (int r = 0; r < nrows; ++r) {
            const Json& row = rows.at(r);
            if (static_cast<int>(row.size()) != g.cols())
                throw std::invalid_argument("generator row has the wrong width");
            for (int c = 0; c < g.cols(); ++c) g.set(r, c, row.at(c).get<std::uint16_t>());
        }

        Schedule sched;
        sched.mode = mode_from_name(j.at("knowledge_mode").get<std::string>());
        const Json& js = j.at("schedule");
        if (static_cast<int>(js.size()) != nrows)
            throw std::invalid_argument("schedule length does not match the generator");
        sched.transmitter.resize(nrows);
        for (const Json& entry : js) {
            int r = entry.at("row").get<int>();
            if (r < 0 || r >= nrows) throw std::invalid_argument("schedule row out of range");
            sched.transmitter[r] = entry.at("user").get<int>();
        }

        DecentralizedCode code{std::move(inst), beta, std::move(g), std::move(sched)};
        Rational len{j.at("length").at("num").get<std::int64_t>(),
                     j.at("length").at("den").get<std::int64_t>()};
        if (!(len == code.length()))
            throw std::invalid_argument("stored length does not match the generator shape");
        return code;
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed code document: ") + e.what());
    }
}

Json to_json(const VerificationReport& report) {
    Json j;
    j["valid"] = report.valid;
    j["schedule_ok"] = report.schedule_ok;
    j["length"] = {{"num", report.length.num()}, {"den", report.length.den()}};

    Json viols = Json::array();
    for (const ScheduleViolation& v : report.violations)
        viols.push_back({{"row", v.row}, {"transmitter", v.transmitter}, {"message", v.message}});
    j["violations"] = std::move(viols);

    Json users = Json::array();
    for (const UserReport& u : report.per_user)
        users.push_back({{"user", u.user},
                         {"decodable", u.decodable},
                         {"satisfied", u.satisfied},
                         {"desired", u.desired}});
    j["per_user"] = std::move(users);
    return j;
}

std::string stable_dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << stable_dump(j);
    if (!out) throw std::runtime_error("write failed: " + path);
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return Json::parse(in);
}

} // namespace picod
