import { App } from "./app.js";

const baseUrl =
  new URLSearchParams(window.location.search).get("api") ?? "http://127.0.0.1:8000";

void new App(baseUrl).start();
