#pragma once

// Structured pass/fail records shared by validators, law checkers and the CLI.

#include <string>
#include <vector>

namespace descent {

struct CheckReport {
    struct Item {
        std::string name;
        bool ok = false;
        std::string detail;
    };

    std::string title;
    std::vector<Item> items;
    std::vector<std::string> unchecked;  // identities out of truncation scope

    CheckReport() = default;
    explicit CheckReport(std::string t) : title(std::move(t)) {}

    bool check(const std::string& name, bool ok, const std::string& detail = "") {
        items.push_back({name, ok, detail});
        return ok;
    }
    void note_unchecked(const std::string& name) { unchecked.push_back(name); }

    bool all_passed() const {
        for (const auto& i : items)
            if (!i.ok) return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (const auto& i : items)
            if (!i.ok) ++n;
        return n;
    }
    std::vector<std::string> failed_names() const {
        std::vector<std::string> out;
        for (const auto& i : items)
            if (!i.ok) out.push_back(i.name);
        return out;
    }

    void merge(const CheckReport& other, const std::string& prefix = "") {
        for (const auto& i : other.items) items.push_back({prefix + i.name, i.ok, i.detail});
        for (const auto& u : other.unchecked) unchecked.push_back(prefix + u);
    }

    std::string summary() const {
        std::string s = title + ": " + std::to_string(items.size() - failures()) + "/" +
                        std::to_string(items.size()) + " identities hold";
        if (!unchecked.empty()) s += " (" + std::to_string(unchecked.size()) + " beyond truncation)";
        if (!all_passed()) {
            s += "; failed:";
            for (const auto& n : failed_names()) s += " [" + n + "]";
        }
        return s;
    }
};

}  // namespace descent
