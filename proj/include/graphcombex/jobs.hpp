#pragma once

#include <condition_variable>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stop_token>
#include <string>
#include <thread>
#include <vector>

#include "improvers.hpp"

namespace gcx {

/// Runs improvers and metric jobs on background threads. Each worker pushes
/// snapshots by value into its own slot; poll() copies the latest one under
/// a short lock and never waits on the worker.
class JobManager {
 public:
  explicit JobManager(std::size_t max_running = 4, std::size_t history_cap = 4096)
      : max_running_(max_running), history_cap_(history_cap) {}

  JobManager(const JobManager&) = delete;
  JobManager& operator=(const JobManager&) = delete;

  ~JobManager() {
    std::vector<std::shared_ptr<Job>> all;
    {
      std::lock_guard lock(mu_);
      for (auto& [id, job] : jobs_) all.push_back(job);
    }
    for (auto& job : all) job->thread.request_stop();
    for (auto& job : all)
      if (job->thread.joinable()) job->thread.join();
  }

  std::string run(JobKind kind, std::shared_ptr<const Graph> graph, const ImproverConfig& cfg) {
    if (!graph) throw Error(ErrorCode::GraphNotFound, "no graph");
    if (!is_metric_job(kind)) cfg.validate();
    auto job = std::make_shared<Job>();
    std::string id;
    {
      std::lock_guard lock(mu_);
      std::size_t running = 0;
      for (const auto& [_, j] : jobs_) running += j->running() ? 1 : 0;
      if (running >= max_running_) {
        throw Error(ErrorCode::TooManyJobs, std::to_string(running) + " jobs already running");
      }
      id = "job-" + std::to_string(++next_id_);
      job->latest.job_id = id;
      job->latest.kind = kind;
      job->thread = std::jthread([job, kind, graph = std::move(graph), cfg, id, cap = history_cap_](
                                     std::stop_token stop) {
        const auto store = [&](const JobSnapshot& s) {
          std::lock_guard lock(job->mu);
          job->latest = s;
          job->latest.job_id = id;
          if (job->history.size() < cap) job->history.push_back(job->latest);
        };
        try {
          run_improver(kind, *graph, cfg, store, stop);
        } catch (const std::exception& e) {
          std::lock_guard lock(job->mu);
          job->latest.status = JobStatus::Failed;
          job->latest.reason = EmitReason::Final;
          job->latest.error = e.what();
          if (job->history.size() < cap) job->history.push_back(job->latest);
        }
        {
          std::lock_guard lock(job->mu);
          job->finished = true;
        }
        job->done.notify_all();
      });
      jobs_.emplace(id, job);
    }
    return id;
  }

  JobSnapshot poll(const std::string& id) const {
    auto job = find(id);
    std::lock_guard lock(job->mu);
    return job->latest;
  }

  /// Every snapshot emitted so far (up to the history cap).
  std::vector<JobSnapshot> history(const std::string& id) const {
    auto job = find(id);
    std::lock_guard lock(job->mu);
    return job->history;
  }

  /// Requests cooperative cancellation; returns the snapshot at that moment.
  JobSnapshot cancel(const std::string& id) {
    auto job = find(id);
    job->thread.request_stop();
    std::lock_guard lock(job->mu);
    return job->latest;
  }

  /// Blocks until the job has stopped and returns its final snapshot.
  JobSnapshot wait(const std::string& id) const {
    auto job = find(id);
    std::unique_lock lock(job->mu);
    job->done.wait(lock, [&] { return job->finished; });
    return job->latest;
  }

  std::vector<std::string> ids() const {
    std::lock_guard lock(mu_);
    std::vector<std::string> out;
    for (const auto& [id, _] : jobs_) out.push_back(id);
    return out;
  }

  std::size_t max_running() const noexcept { return max_running_; }

 private:
  struct Job {
    mutable std::mutex mu;
    std::condition_variable done;
    bool finished = false;
    JobSnapshot latest;
    std::vector<JobSnapshot> history;
    std::jthread thread;

    bool running() const {
      std::lock_guard lock(mu);
      return !finished;
    }
  };

  std::shared_ptr<Job> find(const std::string& id) const {
    std::lock_guard lock(mu_);
    const auto it = jobs_.find(id);
    if (it == jobs_.end()) throw Error(ErrorCode::UnknownJob, "unknown job " + id);
    return it->second;
  }

  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Job>> jobs_;
  std::uint64_t next_id_ = 0;
  std::size_t max_running_;
  std::size_t history_cap_;
};

}  // namespace gcx
