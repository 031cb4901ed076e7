#include <gtest/gtest.h>

#include <thread>

#include "graphcombex/generators.hpp"
#include "graphcombex/jobs.hpp"
#include "support/fixtures.hpp"

namespace gcx {
namespace {

using namespace gcx::testing;
using namespace std::chrono_literals;

TEST(JobManager, RunsToCompletion) {
  JobManager jobs;
  auto g = std::make_shared<const Graph>(sample_graph());
  const auto id = jobs.run(JobKind::IgColouring, g, {});
  const auto done = jobs.wait(id);
  EXPECT_EQ(done.status, JobStatus::Done);
  EXPECT_EQ(done.job_id, id);
  EXPECT_EQ(*done.best, 3u);
  EXPECT_EQ(jobs.poll(id).status, JobStatus::Done);
  const auto tri = jobs.wait(jobs.run(JobKind::TriangleCount, g, {}));
  EXPECT_EQ(*tri.value, 2.0);
}

TEST(JobManager, UnknownJob) {
  JobManager jobs;
  try {
    jobs.poll("job-404");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownJob);
  }
  EXPECT_THROW(jobs.cancel("nope"), Error);
  EXPECT_THROW(jobs.run(JobKind::Girth, nullptr, {}), Error);
}

ImproverConfig long_running() {
  ImproverConfig cfg;
  cfg.max_iterations.reset();
  cfg.max_time = std::chrono::milliseconds(60'000);
  cfg.stop_when_closed = false;
  cfg.snapshot_period = 20ms;
  return cfg;
}

TEST(JobManager, CancelKeepsBestSoFar) {
  JobManager jobs;
  auto g = std::make_shared<const Graph>(random_gnp(200, 0.1, 3));
  const auto id = jobs.run(JobKind::IgColouring, g, long_running());
  jobs.cancel(id);
  const auto out = jobs.wait(id);
  EXPECT_EQ(out.status, JobStatus::Cancelled);
  ASSERT_TRUE(out.best);
  EXPECT_LE(*out.best, dsatur_colouring(*g).count);
  EXPECT_TRUE(is_valid(*g, out.witness->witness));
}

TEST(JobManager, ConcurrencyLimit) {
  JobManager jobs(2);
  auto g = std::make_shared<const Graph>(gen_barabasi_albert(3000, 3, 2));
  const auto a = jobs.run(JobKind::RlsClique, g, long_running());
  const auto b = jobs.run(JobKind::IgCover, g, long_running());
  try {
    jobs.run(JobKind::RlsMis, g, long_running());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooManyJobs);
  }
  jobs.cancel(a);
  jobs.wait(a);
  const auto c = jobs.run(JobKind::LongestCycle, g, long_running());
  jobs.cancel(b);
  jobs.cancel(c);
  EXPECT_EQ(jobs.wait(b).status, JobStatus::Cancelled);
  EXPECT_EQ(jobs.wait(c).status, JobStatus::Cancelled);
}

TEST(JobManager, PollSequenceIsMonotone) {
  JobManager jobs;
  auto g = std::make_shared<const Graph>(random_gnp(150, 0.2, 11));
  auto cfg = long_running();
  cfg.max_time = 300ms;
  const auto id = jobs.run(JobKind::IgColouring, g, cfg);
  std::size_t last = static_cast<std::size_t>(-1);
  for (;;) {
    const auto s = jobs.poll(id);
    if (s.best) {
      ASSERT_LE(*s.best, last);
      last = *s.best;
    }
    if (s.status != JobStatus::Running) break;
    std::this_thread::sleep_for(5ms);
  }
  const auto hist = jobs.history(id);
  ASSERT_GE(hist.size(), 2u);
  for (std::size_t i = 1; i < hist.size(); ++i) ASSERT_LE(*hist[i].best, *hist[i - 1].best);
}

TEST(JobManager, DestructorStopsRunningJobs) {
  auto g = std::make_shared<const Graph>(gen_barabasi_albert(2000, 2, 1));
  const auto t0 = std::chrono::steady_clock::now();
  {
    JobManager jobs;
    jobs.run(JobKind::RlsMis, g, long_running());
    std::this_thread::sleep_for(20ms);
  }
  EXPECT_LT(std::chrono::steady_clock::now() - t0, 10s);
}

}  // namespace
}  // namespace gcx
