/// <reference types="vitest/config" />
import { defineConfig } from "vite";

export default defineConfig({
  server: {
    proxy: {
      "/projects": "http://127.0.0.1:8000",
    },
  },
  test: {
    environment: "happy-dom",
  },
});
