#include "tg/json_io.hpp"

namespace tg::json_io {

json to_json(const arith::Factorization& f) {
    json arr = json::array();
    for (const auto& fac : f.factors)
        arr.push_back(json::array({dec(fac.prime), fac.exponent}));
    return arr;
}

json to_json(const totient::TotientPreimages& t) {
    json j;
    j["target"] = dec(t.target);
    json pre = json::array();
    for (const auto& x : t.preimages) pre.push_back(dec(x));
    j["preimages"] = pre;
    j["complete"] = !t.truncated;
    j["truncated"] = t.truncated;
    if (t.cap) j["cap"] = dec(*t.cap);
    j["probable_prime_checks"] = t.probable_prime_checks;
    return j;
}

json to_json(const forms::FormSystem& s) {
    json arr = json::array();
    for (const auto& f : s.forms) arr.push_back(json::array({dec(f.a), dec(f.b)}));
    return arr;
}

json to_json(const forms::AdmissibilityReport& r) {
    json j;
    j["admissible"] = r.admissible;
    json w = json::object();
    for (const auto& [p, x] : r.witnesses) w[dec(p)] = dec(x);
    j["witnesses"] = w;
    if (r.obstruction) j["obstruction"] = dec(*r.obstruction);
    json cp = json::array();
    for (const auto& p : r.checked_primes) cp.push_back(dec(p));
    j["checked_primes"] = cp;
    j["reduction_note"] = r.reduction_note;
    return j;
}

json to_json(const constructions::Lemma31Witness& w) {
    json j;
    j["b"] = dec(w.b);
    json stages = json::array();
    for (const auto& s : w.stages) {
        json stage = json::array();
        for (const auto& n : s) stage.push_back(dec(n));
        stages.push_back(stage);
    }
    j["stages"] = stages;
    json mv = json::array(), kv = json::array();
    for (const auto& m : w.M_values) mv.push_back(dec(m));
    for (const auto& k : w.K_values) kv.push_back(dec(k));
    j["M_values"] = mv;
    j["K_values"] = kv;
    return j;
}

json to_json(const constructions::ApWitness& w) {
    json j;
    j["D"] = dec(w.D);
    j["a"] = dec(w.a);
    j["v1"] = dec(w.v1);
    j["v2"] = dec(w.v2);
    j["branch"] = w.branch == constructions::ApWitness::Branch::minus ? "minus" : "plus";
    return j;
}

json to_json(const constructions::ApModulus& m) {
    json j;
    j["d"] = dec(m.d);
    j["D"] = dec(m.D);
    j["gamma"] = m.gamma;
    json table = json::object();
    for (const auto& [jj, x] : m.preimage_table) {
        char key[8];
        std::snprintf(key, sizeof key, "%02u", jj);
        table[key] = dec(x);
    }
    j["preimage_table"] = table;
    return j;
}

json to_json(const paperverify::VerificationReport& r) {
    json j;
    j["claim_id"] = r.claim_id;
    j["passed"] = r.passed;
    j["inconclusive"] = r.inconclusive;
    j["probabilistic_steps"] = std::to_string(r.probabilistic_steps);
    json vals = json::object();
    for (const auto& [k, v] : r.values) vals[k] = dec(v);
    j["values"] = vals;
    j["notes"] = r.notes;
    return j;
}

Integer integer_from_json(const json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    throw Error("expected an integer or decimal string in JSON input");
}

forms::FormSystem form_system_from_json(const json& j) {
    if (!j.is_array()) throw Error("form system JSON must be an array of [a, b] pairs");
    forms::FormSystem sys;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2)
            throw Error("each form must be an [a, b] pair");
        Integer a = integer_from_json(item[0]);
        Integer b = integer_from_json(item[1]);
        if (a < 1) throw Error("form coefficient must be >= 1");
        sys.forms.push_back({Natural(a), b});
    }
    if (sys.forms.empty()) throw Error("form system must contain at least one form");
    return sys;
}

}  // namespace tg::json_io
