#pragma once

#include <deque>
#include <memory>
#include <string>

#include "strom/model_executor.hpp"
#include "strom/protocol.hpp"

namespace strom {

/// Checker-side view of an executor: an ordered, full-duplex message stream.
class ExecutorConnection {
public:
  virtual ~ExecutorConnection() = default;
  virtual void send(const CheckerMessage& msg) = 0;
  virtual ExecutorMessage receive() = 0;
};

/// Model executor linked directly into the checker process. Requests are
/// handled synchronously; replies queue in an inbox the caller drains. The
/// inbox doubles as an interleaving control for protocol tests: a test may
/// send a request while emitted messages are still queued, reproducing the
/// races a remote executor would exhibit.
class InProcessModelConnection final : public ExecutorConnection {
public:
  explicit InProcessModelConnection(Model model, bool realtime = false)
      : exec_(std::move(model), realtime) {}

  void send(const CheckerMessage& msg) override {
    for (ExecutorMessage& m : exec_.handle(msg)) inbox_.push_back(std::move(m));
  }

  ExecutorMessage receive() override {
    if (inbox_.empty()) {
      throw ProtocolViolationError("executor has no message for the checker");
    }
    ExecutorMessage m = std::move(inbox_.front());
    inbox_.pop_front();
    return m;
  }

  bool has_pending() const { return !inbox_.empty(); }
  const ModelExecutor& executor() const { return exec_; }

private:
  ModelExecutor exec_;
  std::deque<ExecutorMessage> inbox_;
};

/// Byte transport carrying one message per '\n'-terminated line.
class LineChannel {
public:
  virtual ~LineChannel() = default;
  virtual void write_line(const std::string& line) = 0;
  /// Blocks for the next line. Returns false on orderly end of stream.
  virtual bool read_line(std::string& line) = 0;
};

class LineConnection final : public ExecutorConnection {
public:
  explicit LineConnection(std::unique_ptr<LineChannel> channel)
      : channel_(std::move(channel)) {}

  void send(const CheckerMessage& msg) override { channel_->write_line(encode(msg)); }

  ExecutorMessage receive() override {
    std::string line;
    if (!channel_->read_line(line)) {
      throw ExecutorDiedError("connection closed while awaiting a message");
    }
    return decode_executor_message(line);
  }

private:
  std::unique_ptr<LineChannel> channel_;
};

/// Launches a command via /bin/sh with the protocol on its standard streams.
std::unique_ptr<LineChannel> open_subprocess(const std::string& command);

/// Connects to a line server.
std::unique_ptr<LineChannel> open_tcp(const std::string& host, int port);

/// Listening socket for the executor tool. port 0 picks an ephemeral port.
class TcpListener {
public:
  explicit TcpListener(int port);
  ~TcpListener();
  TcpListener(const TcpListener&) = delete;
  TcpListener& operator=(const TcpListener&) = delete;

  int port() const { return port_; }
  std::unique_ptr<LineChannel> accept_one();

private:
  int fd_ = -1;
  int port_ = 0;
};

/// Executor-side loop: reads checker messages from the channel, feeds the
/// model executor, writes every emitted message back. Returns on End or end
/// of stream.
void serve_model(Model model, LineChannel& channel, bool realtime = false);

}  // namespace strom
