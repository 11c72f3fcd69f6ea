#include "qrsums/app.hpp"

#include "qrsums/classnum.hpp"
#include "qrsums/residues.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace qrs::app {

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

ScanRow scan_row(OddPrime p) {
    const auto prof = residue_profile(p);
    return ScanRow{p.value(),
                   p.class_mod8(),
                   prof.q_o,
                   prof.q_e,
                   prof.a_sum,
                   prof.m_sum,
                   t_exact(prof),
                   c_exact(prof),
                   h_from_forms(p),
                   prof.s_low,
                   prof.s_high,
                   prof.even_below_half,
                   prof.even_above_half};
}

std::string csv_line(const ScanRow& r) {
    std::string s = std::to_string(r.p);
    for (std::int64_t v : {std::int64_t{r.class_mod8}, r.q_o, r.q_e, r.a_value, r.m_value, r.t_value,
                           r.c_value, r.h, r.s_low, r.s_high, r.even_below_half, r.even_above_half}) {
        s += ',';
        s += std::to_string(v);
    }
    return s;
}

std::string json_object(const ScanRow& r) {
    nlohmann::ordered_json j;
    j["p"] = r.p;
    j["class_mod8"] = r.class_mod8;
    j["q_o"] = r.q_o;
    j["q_e"] = r.q_e;
    j["A"] = r.a_value;
    j["M"] = r.m_value;
    j["T"] = r.t_value;
    j["C"] = r.c_value;
    j["h"] = r.h;
    j["s_low"] = r.s_low;
    j["s_high"] = r.s_high;
    j["even_lo"] = r.even_below_half;
    j["even_hi"] = r.even_above_half;
    return j.dump();
}

void check_scan_range(std::uint64_t lo, std::uint64_t hi) {
    if (lo < 3 || lo > hi || hi > kPrimeLimit)
        throw UsageError("range must satisfy 3 <= from <= to <= 2^32 (got " + std::to_string(lo) +
                         ".." + std::to_string(hi) + ")");
}

namespace {

// Rows of one block, already rendered.  JSON rows carry a trailing ",\n".
std::string render_block(std::uint64_t lo, std::uint64_t hi, Format fmt) {
    std::string out;
    for_each_prime(lo, hi, [&](OddPrime p) {
        if (p.class_mod4() != 3)
            return;
        const auto row = scan_row(p);
        if (fmt == Format::Csv) {
            out += csv_line(row);
            out += '\n';
        } else {
            out += "  ";
            out += json_object(row);
            out += ",\n";
        }
    });
    return out;
}

// Blocks are computed by a worker pool and handed to the calling thread,
// which writes them strictly in block order.
class OrderedBlockWriter {
public:
    OrderedBlockWriter(const ScanOptions& opts, std::size_t blocks)
        : opts_(opts), blocks_(blocks), window_(std::size_t{4} * std::max(1u, opts.jobs)) {}

    template <typename Emit>
    void run(Emit emit) {
        std::vector<std::thread> pool;
        const unsigned n = std::max(1u, opts_.jobs);
        for (unsigned i = 0; i < n; ++i)
            pool.emplace_back([this] { work(); });

        std::exception_ptr err;
        try {
            for (std::size_t i = 0; i < blocks_; ++i) {
                std::string chunk;
                {
                    std::unique_lock lock(mu_);
                    cv_.wait(lock, [&] { return error_ || done_.count(i); });
                    if (error_ && !done_.count(i))
                        break;
                    chunk = std::move(done_[i]);
                    done_.erase(i);
                    next_emit_ = i + 1;
                }
                cv_.notify_all();
                emit(chunk);
            }
        } catch (...) {
            err = std::current_exception();
            std::lock_guard lock(mu_);
            if (!error_)
                error_ = err;
        }
        cv_.notify_all();
        for (auto& t : pool)
            t.join();
        if (error_)
            std::rethrow_exception(error_);
    }

private:
    void work() {
        for (;;) {
            const std::size_t idx = next_block_.fetch_add(1);
            if (idx >= blocks_)
                return;
            {
                std::unique_lock lock(mu_);
                cv_.wait(lock, [&] { return error_ || idx < next_emit_ + window_; });
                if (error_)
                    return;
            }
            try {
                const std::uint64_t lo = opts_.lo + idx * opts_.block_width;
                const std::uint64_t hi = std::min(opts_.hi, lo + opts_.block_width - 1);
                std::string chunk = render_block(lo, hi, opts_.format);
                std::lock_guard lock(mu_);
                done_.emplace(idx, std::move(chunk));
            } catch (...) {
                std::lock_guard lock(mu_);
                if (!error_)
                    error_ = std::current_exception();
            }
            cv_.notify_all();
        }
    }

    const ScanOptions& opts_;
    const std::size_t blocks_;
    const std::size_t window_;
    std::atomic<std::size_t> next_block_{0};
    std::mutex mu_;
    std::condition_variable cv_;
    std::map<std::size_t, std::string> done_;
    std::size_t next_emit_ = 0;
    std::exception_ptr error_;
};

} // namespace

void scan(const ScanOptions& opts, std::ostream& out) {
    check_scan_range(opts.lo, opts.hi);
    if (opts.jobs == 0)
        throw UsageError("--jobs must be at least 1");
    if (opts.block_width == 0)
        throw UsageError("block width must be positive");

    const std::size_t blocks = static_cast<std::size_t>((opts.hi - opts.lo) / opts.block_width + 1);
    auto check = [&] {
        if (!out)
            throw IoError("failed writing scan output");
    };

    if (opts.format == Format::Csv) {
        out << kCsvHeader << '\n';
        check();
        OrderedBlockWriter(opts, blocks).run([&](const std::string& chunk) {
            out << chunk;
            check();
        });
    } else {
        // Rows end in ",\n"; the separator is held back until the next row
        // proves it is not the last one.
        out << "[\n";
        bool pending = false;
        OrderedBlockWriter(opts, blocks).run([&](const std::string& chunk) {
            if (chunk.empty())
                return;
            if (pending)
                out << ",\n";
            out.write(chunk.data(), static_cast<std::streamsize>(chunk.size() - 2));
            pending = true;
            check();
        });
        if (pending)
            out << '\n';
        out << "]\n";
    }
    out.flush();
    check();
}

} // namespace qrs::app
