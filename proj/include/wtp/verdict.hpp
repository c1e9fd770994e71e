#pragma once

#include <string>

#include <json.hpp>

namespace wtp {

// Machine-checkable theorem-instance outcome.  A Holds/Fails verdict always
// carries a witness payload that an independent pass can re-check.
struct Verdict {
    enum class Status { Holds, Fails, Unknown };

    Status status = Status::Unknown;
    nlohmann::ordered_json witness = nlohmann::ordered_json::object();
    std::string note;

    bool holds() const { return status == Status::Holds; }
    bool fails() const { return status == Status::Fails; }

    static Verdict yes(nlohmann::ordered_json w = nlohmann::ordered_json::object(),
                       std::string note = "") {
        return {Status::Holds, std::move(w), std::move(note)};
    }
    static Verdict no(nlohmann::ordered_json w, std::string note = "") {
        return {Status::Fails, std::move(w), std::move(note)};
    }
    static Verdict unknown(std::string note) {
        return {Status::Unknown, nlohmann::ordered_json::object(), std::move(note)};
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["status"] = status == Status::Holds   ? "Holds"
                      : status == Status::Fails ? "Fails"
                                                : "Unknown";
        j["witness"] = witness;
        j["note"] = note;
        return j;
    }
};

} // namespace wtp
