#include "strom/transport.hpp"

#include <arpa/inet.h>
#include <fcntl.h>
#include <netdb.h>
#include <netinet/in.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "strom/errors.hpp"

namespace strom {

namespace {

// Buffered line IO over a pair of file descriptors (they may be the same fd).
class FdLineChannel final : public LineChannel {
public:
  FdLineChannel(int read_fd, int write_fd, pid_t child = -1)
      : read_fd_(read_fd), write_fd_(write_fd), child_(child) {}

  ~FdLineChannel() override {
    if (write_fd_ >= 0 && write_fd_ != read_fd_) ::close(write_fd_);
    if (read_fd_ >= 0) ::close(read_fd_);
    if (child_ > 0) {
      int status = 0;
      ::waitpid(child_, &status, 0);
    }
  }

  void write_line(const std::string& line) override {
    std::string buf = line + "\n";
    std::size_t off = 0;
    while (off < buf.size()) {
      ssize_t n = ::write(write_fd_, buf.data() + off, buf.size() - off);
      if (n < 0) {
        if (errno == EINTR) continue;
        throw ExecutorDiedError(std::string("write failed: ") + std::strerror(errno));
      }
      off += static_cast<std::size_t>(n);
    }
  }

  bool read_line(std::string& line) override {
    line.clear();
    for (;;) {
      auto nl = buffer_.find('\n');
      if (nl != std::string::npos) {
        line = buffer_.substr(0, nl);
        buffer_.erase(0, nl + 1);
        return true;
      }
      char chunk[4096];
      ssize_t n = ::read(read_fd_, chunk, sizeof chunk);
      if (n < 0) {
        if (errno == EINTR) continue;
        throw ExecutorDiedError(std::string("read failed: ") + std::strerror(errno));
      }
      if (n == 0) {
        if (!buffer_.empty()) {  // final unterminated line
          line.swap(buffer_);
          return true;
        }
        return false;
      }
      buffer_.append(chunk, static_cast<std::size_t>(n));
    }
  }

private:
  int read_fd_;
  int write_fd_;
  pid_t child_;
  std::string buffer_;
};

}  // namespace

std::unique_ptr<LineChannel> open_subprocess(const std::string& command) {
  int to_child[2];
  int from_child[2];
  if (::pipe(to_child) != 0 || ::pipe(from_child) != 0) {
    throw ExecutorDiedError("pipe() failed");
  }
  ::signal(SIGPIPE, SIG_IGN);
  pid_t pid = ::fork();
  if (pid < 0) throw ExecutorDiedError("fork() failed");
  if (pid == 0) {
    ::dup2(to_child[0], STDIN_FILENO);
    ::dup2(from_child[1], STDOUT_FILENO);
    ::close(to_child[0]);
    ::close(to_child[1]);
    ::close(from_child[0]);
    ::close(from_child[1]);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  ::close(to_child[0]);
  ::close(from_child[1]);
  return std::make_unique<FdLineChannel>(from_child[0], to_child[1], pid);
}

std::unique_ptr<LineChannel> open_tcp(const std::string& host, int port) {
  ::signal(SIGPIPE, SIG_IGN);
  struct addrinfo hints = {};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  struct addrinfo* res = nullptr;
  std::string port_str = std::to_string(port);
  int rc = ::getaddrinfo(host.c_str(), port_str.c_str(), &hints, &res);
  if (rc != 0) {
    throw ExecutorDiedError("cannot resolve " + host + ": " + gai_strerror(rc));
  }
  int fd = -1;
  for (struct addrinfo* ai = res; ai; ai = ai->ai_next) {
    fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) continue;
    if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) break;
    ::close(fd);
    fd = -1;
  }
  ::freeaddrinfo(res);
  if (fd < 0) {
    throw ExecutorDiedError("cannot connect to " + host + ":" + port_str);
  }
  return std::make_unique<FdLineChannel>(fd, fd);
}

TcpListener::TcpListener(int port) {
  ::signal(SIGPIPE, SIG_IGN);
  fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
  if (fd_ < 0) throw ExecutorDiedError("socket() failed");
  int one = 1;
  ::setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
  struct sockaddr_in addr = {};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = htons(static_cast<std::uint16_t>(port));
  if (::bind(fd_, reinterpret_cast<struct sockaddr*>(&addr), sizeof addr) != 0) {
    ::close(fd_);
    throw ExecutorDiedError("bind() failed: " + std::string(std::strerror(errno)));
  }
  if (::listen(fd_, 1) != 0) {
    ::close(fd_);
    throw ExecutorDiedError("listen() failed");
  }
  socklen_t len = sizeof addr;
  ::getsockname(fd_, reinterpret_cast<struct sockaddr*>(&addr), &len);
  port_ = ntohs(addr.sin_port);
}

TcpListener::~TcpListener() {
  if (fd_ >= 0) ::close(fd_);
}

std::unique_ptr<LineChannel> TcpListener::accept_one() {
  int client = ::accept(fd_, nullptr, nullptr);
  if (client < 0) throw ExecutorDiedError("accept() failed");
  return std::make_unique<FdLineChannel>(client, client);
}

void serve_model(Model model, LineChannel& channel, bool realtime) {
  ModelExecutor exec(std::move(model), realtime);
  std::string line;
  while (channel.read_line(line)) {
    if (line.empty()) continue;
    CheckerMessage msg = decode_checker_message(line);
    bool is_end = std::holds_alternative<EndMsg>(msg);
    for (const ExecutorMessage& reply : exec.handle(msg)) {
      channel.write_line(encode(reply));
    }
    if (is_end) return;
  }
}

}  // namespace strom
