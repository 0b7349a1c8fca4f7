#include "ospec/factor_cache.hpp"

#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ospec {

FactorCache& factor_cache() {
    static FactorCache cache;
    return cache;
}

void FactorCache::set_path(const std::string& path) {
    std::unique_lock lock(mutex_);
    path_ = path;
    dirty_ = false;
    if (!path_.empty())
        load_file(path_);
}

std::optional<Factorization> FactorCache::lookup(const Int& n) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(n);
    if (it == entries_.end())
        return std::nullopt;
    return it->second;
}

void FactorCache::store(const Int& n, const Factorization& f) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.emplace(n, f);
    if (inserted)
        dirty_ = true;
}

std::size_t FactorCache::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

void FactorCache::clear() {
    std::unique_lock lock(mutex_);
    entries_.clear();
    dirty_ = false;
}

void FactorCache::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        return;  // nothing cached yet
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        auto eq = line.find(" = ");
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed cache line");
        Int n(line.substr(0, eq));
        Factorization f;
        std::istringstream rest(line.substr(eq + 3));
        std::string token;
        Int check = 1;
        while (rest >> token) {
            if (token == "*")
                continue;
            auto caret = token.find('^');
            if (caret == std::string::npos)
                throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed factor token");
            Int p(token.substr(0, caret));
            unsigned long e = std::stoul(token.substr(caret + 1));
            if (e == 0 || (!f.entries.empty() && p <= f.entries.back().first))
                throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad exponent or prime order");
            if (!is_prime(p))
                throw std::runtime_error(path + ":" + std::to_string(lineno) + ": composite listed as prime");
            f.entries.emplace_back(p, static_cast<unsigned>(e));
            check *= pow_int(p, e);
        }
        if (check != n)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": product does not match key");
        entries_.emplace(std::move(n), std::move(f));
    }
}

void FactorCache::flush() {
    std::unique_lock lock(mutex_);
    if (path_.empty() || !dirty_)
        return;
    const std::string tmp = path_ + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write factor cache: " + tmp);
        for (const auto& [n, f] : entries_) {  // std::map keeps keys sorted
            out << n.get_str() << " =";
            bool first = true;
            for (const auto& [p, e] : f.entries) {
                out << (first ? " " : " * ") << p.get_str() << '^' << e;
                first = false;
            }
            out << '\n';
        }
    }
    if (std::rename(tmp.c_str(), path_.c_str()) != 0)
        throw std::runtime_error("cannot replace factor cache: " + path_);
    dirty_ = false;
}

}  // namespace ospec
