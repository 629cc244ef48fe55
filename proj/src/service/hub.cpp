#include "hearth/service/hub.hpp"

#include <filesystem>

#include "hearth/common/encoding.hpp"

namespace hearth::service {

using json = nlohmann::json;
using auth::AuthOutcomeKind;

std::string_view to_string(Requirement r) {
  switch (r) {
    case Requirement::session: return "session";
    case Requirement::read: return "read";
    case Requirement::write: return "write";
    case Requirement::admin: return "admin";
  }
  return "?";
}

int status_of(AuthOutcomeKind kind) {
  switch (kind) {
    case AuthOutcomeKind::ok: return 200;
    case AuthOutcomeKind::empty_username:
    case AuthOutcomeKind::empty_password: return 400;
    case AuthOutcomeKind::username_unknown:
    case AuthOutcomeKind::wrong_password:
    case AuthOutcomeKind::spoofing_detected:
    case AuthOutcomeKind::unrecognized_face: return 401;
    case AuthOutcomeKind::username_exists: return 409;
    case AuthOutcomeKind::account_not_active: return 423;
    case AuthOutcomeKind::password_fallback_available: return 428;
  }
  return 500;
}

chat::EntityLexicon build_lexicon(const std::vector<things::RoomSpec>& rooms) {
  chat::EntityLexicon lex = chat::EntityLexicon::builtin();
  for (const auto& r : rooms) {
    auto bind = [&](const std::string& surface) {
      // The built-in lexicon already knows the default lounge phrases.
      const auto known = lex.lookup(surface);
      if (known && known->keyword == r.slot) return;
      lex.add(surface, r.slot, chat::EntityGroup::room);
    };
    bind(r.name);
    for (const auto& s : r.synonyms) bind(s);
  }
  return lex;
}

json to_json(const auth::AccountSummary& s) {
  return json{{"username", s.username},
              {"status", auth::to_string(s.status)},
              {"permission", auth::to_string(s.permission)},
              {"created_at", format_timestamp(s.created_at)}};
}

json to_json(const notify::Notification& n) {
  return json{{"id", n.id},
              {"kind", notify::to_string(n.kind)},
              {"username", n.username ? json(*n.username) : json(nullptr)},
              {"image_b64", to_base64(n.image)},
              {"created_at", format_timestamp(n.created_at)},
              {"acknowledged", n.acknowledged},
              {"persisted", n.persisted}};
}

json to_json(const things::DeviceReading& r) {
  json value = r.kind == things::DeviceKind::light ? json(r.value != 0.0) : json(r.value);
  return json{{"device_id", r.device_id},
              {"room", r.room},
              {"kind", things::to_string(r.kind)},
              {"value", value},
              {"tick", r.sampled_at}};
}

json to_json(const chat::ChatIntent& intent) {
  return json{{"action", chat::to_string(intent.action)},
              {"entities", intent.entities},
              {"access_class", to_string(intent.access_class)},
              {"canonical", intent.canonical}};
}

auth::FaceFrames parse_face_frames(const json& body) {
  auth::FaceFrames f;
  try {
    if (body.contains("frames")) f.frames = body.at("frames").get<std::vector<auth::Embedding>>();
    if (body.contains("image_b64")) f.capture_image = from_base64(body.at("image_b64").get<std::string>());
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("bad face frames: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw MalformedInput(std::string("bad image: ") + e.what());
  }
  return f;
}

namespace {

std::string string_field(const json& body, const char* key) {
  if (!body.contains(key) || body[key].is_null()) return {};
  if (!body[key].is_string()) throw MalformedInput(std::string(key) + " must be a string");
  return body[key].get<std::string>();
}

Reply error_reply(int status, std::string_view code, std::string_view message) {
  return {status, json{{"error", code}, {"message", message}}};
}

json outcome_json(const auth::AuthOutcome& o) {
  json j{{"outcome", auth::to_string(o.kind)}, {"is_admin", o.is_admin}};
  if (o.session_token) j["token"] = *o.session_token;
  return j;
}

}  // namespace

template <typename Fn>
Reply Hub::guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Unauthorized& e) {
    return error_reply(401, "unauthorized", e.what());
  } catch (const Forbidden& e) {
    return error_reply(403, "forbidden", e.what());
  } catch (const things::PermissionDenied& e) {
    return error_reply(403, "forbidden", e.what());
  } catch (const things::DeviceTimeout& e) {
    return error_reply(504, "device_timeout", e.what());
  } catch (const NotFound& e) {
    return error_reply(404, "not_found", e.what());
  } catch (const MalformedInput& e) {
    return error_reply(400, "validation", e.what());
  } catch (const InvalidArgument& e) {
    return error_reply(400, "validation", e.what());
  } catch (const DegenerateCapture& e) {
    return error_reply(400, "validation", e.what());
  } catch (const json::exception& e) {
    return error_reply(400, "validation", e.what());
  } catch (const std::exception& e) {
    return error_reply(500, "internal", e.what());
  }
}

Hub::Hub(ServiceConfig cfg, ClockFn clock)
    : cfg_(std::move(cfg)),
      clock_(std::move(clock)),
      sessions_(cfg_.session_ttl, clock_),
      notifications_(clock_) {
  validate(cfg_);
  std::filesystem::create_directories(cfg_.data_dir);
  const auto accounts_path = (std::filesystem::path(cfg_.data_dir) / kAccountsFile).string();
  const auto notices_path = (std::filesystem::path(cfg_.data_dir) / kNotificationsFile).string();

  accounts_.restore(load_accounts(accounts_path));
  notifications_.restore(load_notifications(notices_path));
  account_journal_ = std::make_unique<JsonlJournal>(accounts_path);
  notification_journal_ = std::make_unique<JsonlJournal>(notices_path);
  accounts_.set_journal([j = account_journal_.get()](const auth::UserAccount& a) { j->append(account_to_json(a)); });
  notifications_.set_journal(
      [j = notification_journal_.get()](const notify::Notification& n) { j->append(notification_to_json(n)); });

  login_ = std::make_unique<auth::LoginManager>(
      accounts_, notifications_, cfg_.auth,
      [this](const std::string& user, bool is_admin) { return sessions_.issue(user, is_admin).token; },
      nullptr, nullptr, clock_);
  login_->set_admin(cfg_.admin.username, cfg_.admin.password);
  admin_ = std::make_unique<admin::AdminManager>(accounts_);

  for (const auto& r : cfg_.rooms) roster_.add_room(r);
  simulator_ = std::make_unique<things::Simulator>(broker_, roster_, cfg_.seed, cfg_.tick_period);
  for (const auto& d : cfg_.devices) simulator_->register_device(d);
  things_ = std::make_unique<things::ThingsManager>(broker_, roster_, cfg_.device_timeout);

  const std::string training = cfg_.training_file.empty() ? default_training_file() : cfg_.training_file;
  chatbot_ = std::make_unique<chat::Chatbot>(build_lexicon(cfg_.rooms), chat::load_training_file(training));

  if (cfg_.auto_tick) simulator_->start_ticking();
}

Hub::~Hub() {
  if (simulator_) simulator_->stop_ticking();
}

Principal Hub::authorize(const std::string& token, Requirement need) {
  if (token.empty()) throw Unauthorized("missing bearer token");
  const auto session = sessions_.resolve(token);
  if (!session) throw Unauthorized("invalid or expired token");

  Principal p;
  p.username = session->username;
  if (session->is_admin) {
    if (!login_->is_admin_name(session->username)) throw Unauthorized("admin session no longer valid");
    p.is_admin = true;
    p.permission = auth::Permission::read_write;
    return p;
  }
  // Permission comes from the live account, never from the session.
  const auto account = accounts_.find(session->username);
  if (!account || account->status != auth::AccountStatus::active) {
    sessions_.revoke(token);
    throw Unauthorized("account is not active");
  }
  p.permission = account->permission;
  switch (need) {
    case Requirement::session: break;
    case Requirement::read:
      if (!auth::allows_read(p.permission)) throw Forbidden("read permission required");
      break;
    case Requirement::write:
      if (!auth::allows_write(p.permission)) throw Forbidden("write permission required");
      break;
    case Requirement::admin: throw Forbidden("admin only");
  }
  return p;
}

Reply Hub::register_user(const json& body) {
  return guarded([&] {
    const auto frames = parse_face_frames(body);
    const auto outcome =
        login_->register_user(string_field(body, "username"), string_field(body, "password"), frames);
    return Reply{status_of(outcome.kind), outcome_json(outcome)};
  });
}

Reply Hub::login(const json& body) {
  return guarded([&] {
    const auto frames = parse_face_frames(body);
    std::optional<std::string> password;
    if (body.contains("password") && !body["password"].is_null()) password = string_field(body, "password");
    const auto outcome = login_->login(string_field(body, "username"), password, frames);
    return Reply{status_of(outcome.kind), outcome_json(outcome)};
  });
}

Reply Hub::chat(const std::string& token, const json& body) {
  return guarded([&] {
    const Principal who = authorize(token, Requirement::session);
    const std::string utterance = string_field(body, "utterance");
    const chat::ChatIntent intent = chatbot_->interpret(utterance);

    // Rendered copy: room slots read as room names in the reply text.
    chat::ChatIntent shown = intent;
    if (auto it = shown.entities.find(std::string(chat::kRoomSlot)); it != shown.entities.end())
      if (auto room = roster_.room(it->second)) it->second = room->name;

    json reply{{"intent", to_json(intent)}};
    if (intent.action == chat::Action::unknown || intent.action == chat::Action::clarify_room) {
      reply["response"] = chatbot_->respond(shown);
      return Reply{200, reply};
    }
    if (!auth::permits(who.permission, intent.access_class)) {
      reply["error"] = "forbidden";
      reply["response"] = "You do not have " + std::string(to_string(intent.access_class)) +
                          " permission for this request.";
      return Reply{403, reply};
    }
    const auto result = things_->dispatch(intent, who.permission);
    auto data = things::response_data(result);
    if (auto it = data.find("$room"); it != data.end())
      if (auto room = roster_.room(it->second)) it->second = room->name;
    reply["response"] = chatbot_->respond(shown, data);
    if (result.kind != things::DispatchResult::Kind::rooms) reply["reading"] = to_json(result.reading);
    return Reply{200, reply};
  });
}

Reply Hub::devices(const std::string& token) {
  return guarded([&] {
    authorize(token, Requirement::read);
    json rooms = json::array();
    for (const auto& r : roster_.rooms())
      rooms.push_back(json{{"slot", r.slot}, {"name", r.name}, {"synonyms", r.synonyms}});
    json devs = json::array();
    for (const auto& d : things_->devices()) {
      json j{{"device_id", d.spec.device_id},
             {"room", d.spec.room},
             {"kind", things::to_string(d.spec.kind)},
             {"latest", d.latest ? to_json(*d.latest) : json(nullptr)}};
      devs.push_back(std::move(j));
    }
    return Reply{200, json{{"rooms", rooms}, {"devices", devs}}};
  });
}

Reply Hub::command(const std::string& token, const std::string& device_id, const json& body) {
  return guarded([&] {
    const Principal who = authorize(token, Requirement::write);
    if (!body.contains("value")) throw MalformedInput("value is required");
    const auto& v = body["value"];
    double value = 0.0;
    if (v.is_boolean())
      value = v.get<bool>() ? 1.0 : 0.0;
    else if (v.is_number())
      value = v.get<double>();
    else
      throw MalformedInput("value must be a number or boolean");
    const auto result = things_->command(device_id, value, who.permission);
    return Reply{200, json{{"ack", true}, {"state", to_json(result.reading)}}};
  });
}

Reply Hub::pending(const std::string& token) {
  return guarded([&] {
    authorize(token, Requirement::admin);
    json list = json::array();
    for (const auto& s : admin_->list_pending()) list.push_back(to_json(s));
    return Reply{200, json{{"pending", list}}};
  });
}

Reply Hub::notifications(const std::string& token, std::optional<std::uint64_t> since_id) {
  return guarded([&] {
    authorize(token, Requirement::admin);
    json list = json::array();
    for (const auto& n : notifications_.list(std::nullopt, since_id)) list.push_back(to_json(n));
    return Reply{200, json{{"notifications", list}, {"last_id", notifications_.last_id()}}};
  });
}

Reply Hub::approval(const std::string& token, const json& body) {
  return guarded([&] {
    authorize(token, Requirement::admin);
    admin::ApprovalDecision d;
    d.username = string_field(body, "username");
    if (d.username.empty()) throw MalformedInput("username is required");
    d.status = auth::parse_status(string_field(body, "status"));
    d.permission = auth::parse_permission(string_field(body, "permission"));
    const auto summary = admin_->set_user_approval(d);
    return Reply{200, to_json(summary)};
  });
}

Reply Hub::acknowledge(const std::string& token, std::uint64_t id) {
  return guarded([&] {
    authorize(token, Requirement::admin);
    return Reply{200, to_json(notifications_.acknowledge(id))};
  });
}

json Hub::snapshot() const {
  json accounts = json::array();
  for (const auto& a : accounts_.all()) accounts.push_back(account_to_json(a));
  json notes = json::array();
  for (const auto& n : notifications_.list()) notes.push_back(notification_to_json(n));
  return json{{"accounts", accounts}, {"notifications", notes}};
}

}  // namespace hearth::service
